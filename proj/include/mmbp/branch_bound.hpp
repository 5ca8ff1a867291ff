#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmbp/enumeration.hpp"
#include "mmbp/instance.hpp"

namespace mmbp {

enum class Side : std::uint8_t { Free = 0, InS = 1, OutS = 2 };

// A partial S / V\S assignment. side is 1-based (side[0] unused);
// fixed_cut_sums[l] sums w_el over edges whose endpoints are assigned to
// opposite sides.
struct PartialAssignment {
  std::vector<Side> side;
  std::int32_t count_in = 0;
  std::int32_t count_out = 0;
  std::vector<Weight> fixed_cut_sums;

  // Derives counts and fixed cut sums from the side vector. Throws
  // std::invalid_argument if sides has the wrong length or either side
  // already exceeds n/2.
  static PartialAssignment from_sides(const Instance& instance,
                                      std::vector<Side> sides);
};

// Optimistic completion bound: min over l of fixed_cut_sums[l] plus the
// weights of every edge that is not yet decided same-side. Never smaller
// than the best completion's cut weight.
Weight upper_bound(const Instance& instance, const PartialAssignment& pa);

// Exact branch-and-bound. Vertex 1 is pre-assigned to S; remaining vertices
// are branched InS-first in order of descending total incident weight.
// Subtrees are pruned when the bound cannot beat the incumbent or when one
// side already holds more than n/2 vertices. A completed search replays the
// optimum in lexicographic order so the reported (value, bisection) pair
// matches solve_enumeration exactly, tie-break included.
SolveResult solve_bnb(const Instance& instance,
                      std::optional<double> time_limit_s = {});

}  // namespace mmbp
