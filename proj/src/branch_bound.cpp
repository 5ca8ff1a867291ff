#include "mmbp/branch_bound.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "adjacency.hpp"
#include "mmbp/kernels.hpp"

namespace mmbp {

PartialAssignment PartialAssignment::from_sides(const Instance& instance,
                                                std::vector<Side> sides) {
  const std::size_t n = static_cast<std::size_t>(instance.vertex_count());
  if (sides.size() != n + 1)
    throw std::invalid_argument("side vector must have length n+1 (1-based)");
  PartialAssignment pa;
  pa.side = std::move(sides);
  pa.side[0] = Side::Free;
  for (std::size_t v = 1; v <= n; ++v) {
    if (pa.side[v] == Side::InS) ++pa.count_in;
    if (pa.side[v] == Side::OutS) ++pa.count_out;
  }
  const std::int32_t half = instance.vertex_count() / 2;
  if (pa.count_in > half || pa.count_out > half)
    throw std::invalid_argument("partial assignment overfills one side");

  const std::size_t k = static_cast<std::size_t>(instance.dim());
  std::vector<std::int64_t> fixed(k, 0);
  const auto& ops = kernels::active();
  for (std::int32_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    const Side su = pa.side[static_cast<std::size_t>(edge.u)];
    const Side sv = pa.side[static_cast<std::size_t>(edge.v)];
    if (su != Side::Free && sv != Side::Free && su != sv)
      ops.add_row(fixed.data(), instance.weight_row(e).data(), k);
  }
  pa.fixed_cut_sums.reserve(k);
  for (const std::int64_t s : fixed)
    pa.fixed_cut_sums.push_back(Weight::from_milli(s));
  return pa;
}

Weight upper_bound(const Instance& instance, const PartialAssignment& pa) {
  const std::size_t n = static_cast<std::size_t>(instance.vertex_count());
  if (pa.side.size() != n + 1)
    throw std::invalid_argument("side vector must have length n+1 (1-based)");
  const std::size_t k = static_cast<std::size_t>(instance.dim());
  // Everything except edges already decided same-side can still be cut, so
  // the bound is min over l of total[l] - excluded[l].
  std::vector<std::int64_t> excluded(k, 0);
  const auto& ops = kernels::active();
  for (std::int32_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    const Side su = pa.side[static_cast<std::size_t>(edge.u)];
    const Side sv = pa.side[static_cast<std::size_t>(edge.v)];
    if (su != Side::Free && su == sv)
      ops.add_row(excluded.data(), instance.weight_row(e).data(), k);
  }
  return Weight::from_milli(
      ops.sub_min(instance.total_sums().data(), excluded.data(), k));
}

namespace {

using Clock = std::chrono::steady_clock;

struct BnbSearch {
  const Instance& instance;
  const kernels::Ops& ops;
  std::vector<std::vector<detail::IncidentEdge>> adj;

  std::int32_t n;
  std::size_t k;
  std::int32_t half;

  std::vector<Side> side;            // 1-based
  std::int32_t count_in = 0;
  std::int32_t count_out = 0;
  std::vector<std::int64_t> excluded;  // same-side decided weight sums
  std::vector<std::int64_t> fixed;     // cut-decided weight sums

  std::int64_t incumbent_value = -1;
  std::vector<std::int32_t> incumbent_members;
  double time_to_best = 0.0;

  std::uint64_t explored_candidates = 0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned_by_bound = 0;
  std::uint64_t pruned_by_balance = 0;

  Clock::time_point start;
  std::optional<double> limit;
  bool timed_out = false;

  explicit BnbSearch(const Instance& inst, std::optional<double> time_limit)
      : instance(inst),
        ops(kernels::active()),
        adj(detail::build_adjacency(inst)),
        n(inst.vertex_count()),
        k(static_cast<std::size_t>(inst.dim())),
        half(inst.vertex_count() / 2),
        side(static_cast<std::size_t>(inst.vertex_count()) + 1, Side::Free),
        excluded(k, 0),
        fixed(k, 0),
        start(Clock::now()),
        limit(time_limit) {
    side[1] = Side::InS;
    count_in = 1;
  }

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  void check_clock() {
    if (limit && (nodes_explored & 0xFF) == 0 && elapsed() >= *limit)
      timed_out = true;
  }

  void assign(std::int32_t v, Side s) {
    side[static_cast<std::size_t>(v)] = s;
    if (s == Side::InS)
      ++count_in;
    else
      ++count_out;
    for (const auto& inc : adj[static_cast<std::size_t>(v)]) {
      const Side other = side[static_cast<std::size_t>(inc.other)];
      if (other == Side::Free) continue;
      if (other == s)
        ops.add_row(excluded.data(), instance.weight_row(inc.edge).data(), k);
      else
        ops.add_row(fixed.data(), instance.weight_row(inc.edge).data(), k);
    }
  }

  void unassign(std::int32_t v) {
    const Side s = side[static_cast<std::size_t>(v)];
    side[static_cast<std::size_t>(v)] = Side::Free;
    if (s == Side::InS)
      --count_in;
    else
      --count_out;
    for (const auto& inc : adj[static_cast<std::size_t>(v)]) {
      const Side other = side[static_cast<std::size_t>(inc.other)];
      if (other == Side::Free) continue;
      if (other == s)
        ops.sub_row(excluded.data(), instance.weight_row(inc.edge).data(), k);
      else
        ops.sub_row(fixed.data(), instance.weight_row(inc.edge).data(), k);
    }
  }

  std::int64_t bound() const {
    return ops.sub_min(instance.total_sums().data(), excluded.data(), k);
  }

  std::vector<std::int32_t> current_members() const {
    std::vector<std::int32_t> members;
    members.reserve(static_cast<std::size_t>(half));
    for (std::int32_t v = 1; v <= n; ++v)
      if (side[static_cast<std::size_t>(v)] == Side::InS) members.push_back(v);
    return members;
  }

  // Phase 1: maximize the value, branching heavy vertices first, pruning
  // bound <= incumbent.
  void search_value(const std::vector<std::int32_t>& order, std::size_t depth) {
    ++nodes_explored;
    check_clock();
    if (timed_out) return;
    if (count_in > half || count_out > half) {
      ++pruned_by_balance;
      return;
    }
    if (bound() <= incumbent_value) {
      ++pruned_by_bound;
      return;
    }
    if (depth == order.size()) {
      ++explored_candidates;
      const std::int64_t value = ops.min_reduce(fixed.data(), k);
      if (value > incumbent_value) {
        incumbent_value = value;
        incumbent_members = current_members();
        time_to_best = elapsed();
      }
      return;
    }
    const std::int32_t v = order[depth];
    for (const Side s : {Side::InS, Side::OutS}) {
      assign(v, s);
      search_value(order, depth + 1);
      unassign(v);
      if (timed_out) return;
    }
  }

  // Phase 2: with the optimal value proven, replay in lexicographic order
  // (vertex id, InS first) keeping subtrees that can still reach it; the
  // first completed leaf is the lexicographically smallest optimum, matching
  // enumeration's tie-break.
  bool replay_tiebreak(std::int32_t v, std::int64_t target) {
    ++nodes_explored;
    check_clock();
    if (timed_out) return false;
    if (count_in > half || count_out > half) {
      ++pruned_by_balance;
      return false;
    }
    if (bound() < target) {
      ++pruned_by_bound;
      return false;
    }
    if (v > n) {
      ++explored_candidates;
      const std::int64_t value = ops.min_reduce(fixed.data(), k);
      assert(value == target);
      if (value != target) return false;
      incumbent_members = current_members();
      return true;
    }
    for (const Side s : {Side::InS, Side::OutS}) {
      assign(v, s);
      const bool found = replay_tiebreak(v + 1, target);
      unassign(v);
      if (found || timed_out) return found;
    }
    return false;
  }
};

}  // namespace

SolveResult solve_bnb(const Instance& instance,
                      std::optional<double> time_limit_s) {
  BnbSearch search(instance, time_limit_s);

  // Branch on heavy vertices first so the bound tightens early.
  std::vector<std::int64_t> incident(
      static_cast<std::size_t>(instance.vertex_count()) + 1, 0);
  for (std::int32_t e = 0; e < instance.edge_count(); ++e) {
    std::int64_t total = 0;
    for (const std::int64_t w : instance.weight_row(e)) total += w;
    incident[static_cast<std::size_t>(instance.edge(e).u)] += total;
    incident[static_cast<std::size_t>(instance.edge(e).v)] += total;
  }
  std::vector<std::int32_t> order(
      static_cast<std::size_t>(instance.vertex_count()) - 1);
  std::iota(order.begin(), order.end(), 2);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int32_t a, std::int32_t b) {
                     return incident[static_cast<std::size_t>(a)] >
                            incident[static_cast<std::size_t>(b)];
                   });

  search.search_value(order, 0);

  if (search.incumbent_members.empty()) {
    // Timed out before reaching any leaf; fall back to the first
    // lexicographic bisection so the result still carries a real incumbent.
    std::vector<std::int32_t> trivial(
        static_cast<std::size_t>(instance.vertex_count()) / 2);
    std::iota(trivial.begin(), trivial.end(), 1);
    const Bisection s(instance.vertex_count(), trivial);
    search.incumbent_value = cut_weight(instance, s).weight.milli;
    search.incumbent_members = std::move(trivial);
  }

  bool tiebreak_complete = false;
  if (!search.timed_out) {
    tiebreak_complete = search.replay_tiebreak(2, search.incumbent_value);
  }

  SolveResult result{
      .status = (!search.timed_out && tiebreak_complete)
                    ? SolveResult::Status::Optimal
                    : SolveResult::Status::TimeLimit,
      .best_value = Weight::from_milli(search.incumbent_value),
      .best_bisection = Bisection(instance.vertex_count(),
                                  std::move(search.incumbent_members)),
      .explored = search.explored_candidates,
      .time_to_best = search.time_to_best,
      .time_total = search.elapsed(),
      .nodes_explored = search.nodes_explored,
      .pruned_by_bound = search.pruned_by_bound,
      .pruned_by_balance = search.pruned_by_balance,
  };
  return result;
}

}  // namespace mmbp
