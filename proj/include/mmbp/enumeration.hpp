#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "mmbp/instance.hpp"

namespace mmbp {

struct SolveResult {
  enum class Status { Optimal, TimeLimit };

  Status status = Status::Optimal;
  Weight best_value;
  Bisection best_bisection;
  std::uint64_t explored = 0;   // candidate bisections evaluated
  double time_to_best = 0.0;    // seconds until the incumbent last improved
  double time_total = 0.0;

  // Branch-and-bound only; zero for enumeration.
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned_by_bound = 0;
  std::uint64_t pruned_by_balance = 0;
};

const char* to_string(SolveResult::Status status);

// Exact optimum by scanning the C(n-1, n/2-1) balanced subsets containing
// vertex 1, in lexicographic member-set order. Cut sums are maintained
// incrementally; strict-improvement updates make the reported optimum the
// lexicographically smallest one. With a time limit, returns the incumbent
// and Status::TimeLimit once it expires.
SolveResult solve_enumeration(const Instance& instance,
                              std::optional<double> time_limit_s = {});

// Test hook: called at every evaluated subset with the members (including
// vertex 1) and the incrementally maintained coordinate sums, so tests can
// compare against from-scratch recomputation.
using LeafInspector =
    std::function<void(std::span<const std::int32_t> members,
                       std::span<const std::int64_t> sums_milli)>;

SolveResult solve_enumeration(const Instance& instance,
                              std::optional<double> time_limit_s,
                              const LeafInspector& inspector);

}  // namespace mmbp
