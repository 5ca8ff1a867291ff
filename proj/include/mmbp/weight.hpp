#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mmbp {

// Fixed-point weight in milli-units: 8.000 is stored as 8000. All cut
// arithmetic stays in integers so comparisons and reported values are exact.
struct Weight {
  std::int64_t milli = 0;

  static constexpr Weight from_milli(std::int64_t m) { return Weight{m}; }

  // Decimal string with exactly three fraction digits ("8.000").
  std::string str() const;

  auto operator<=>(const Weight&) const = default;
};

// Parses a non-negative decimal with at most three fraction digits into
// milli-units. Returns nullopt on malformed input ("", "1.2345", "-1", "x").
std::optional<std::int64_t> parse_milli(std::string_view text);

// Like parse_milli but requires exactly three fraction digits, the form the
// canonical serializers emit.
std::optional<std::int64_t> parse_milli_exact3(std::string_view text);

std::string format_milli(std::int64_t milli);

}  // namespace mmbp
