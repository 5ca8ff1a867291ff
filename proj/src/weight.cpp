#include "mmbp/weight.hpp"

#include <cctype>
#include <cstdlib>

namespace mmbp {

std::string format_milli(std::int64_t milli) {
  const bool neg = milli < 0;
  std::uint64_t m = neg ? 0ull - static_cast<std::uint64_t>(milli)
                        : static_cast<std::uint64_t>(milli);
  std::string whole = std::to_string(m / 1000);
  std::string frac = std::to_string(m % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return (neg ? "-" : "") + whole + "." + frac;
}

std::string Weight::str() const { return format_milli(milli); }

namespace {

std::optional<std::int64_t> parse_impl(std::string_view text, bool exact3) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  std::int64_t whole = 0;
  std::size_t digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    if (whole > (INT64_MAX - 9) / 10) return std::nullopt;
    whole = whole * 10 + (text[pos] - '0');
    ++pos;
    ++digits;
  }
  if (digits == 0) return std::nullopt;
  std::int64_t frac = 0;
  std::size_t frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (frac_digits < 3) frac = frac * 10 + (text[pos] - '0');
      ++pos;
      ++frac_digits;
    }
    if (frac_digits == 0 || frac_digits > 3) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  if (exact3 && frac_digits != 3) return std::nullopt;
  for (std::size_t i = frac_digits; i < 3; ++i) frac *= 10;
  if (whole > (INT64_MAX - frac) / 1000) return std::nullopt;
  return whole * 1000 + frac;
}

}  // namespace

std::optional<std::int64_t> parse_milli(std::string_view text) {
  return parse_impl(text, false);
}

std::optional<std::int64_t> parse_milli_exact3(std::string_view text) {
  return parse_impl(text, true);
}

}  // namespace mmbp
