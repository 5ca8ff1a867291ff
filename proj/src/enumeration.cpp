#include "mmbp/enumeration.hpp"

#include <chrono>

#include "adjacency.hpp"
#include "mmbp/kernels.hpp"

namespace mmbp {

const char* to_string(SolveResult::Status status) {
  switch (status) {
    case SolveResult::Status::Optimal:
      return "Optimal";
    case SolveResult::Status::TimeLimit:
      return "TimeLimit";
  }
  return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct EnumSearch {
  const Instance& instance;
  const kernels::Ops& ops;
  std::vector<std::vector<detail::IncidentEdge>> adj;

  std::int32_t n;
  std::size_t k;
  std::int32_t want;  // members beyond vertex 1

  std::vector<std::uint8_t> side;   // 1-based membership mask
  std::vector<std::int64_t> sums;   // cut sums of the current mask
  std::vector<std::int32_t> members;  // DFS stack, vertex 1 at the front

  std::int64_t best_value = -1;
  std::vector<std::int32_t> best_members;
  std::uint64_t explored = 0;
  double time_to_best = 0.0;

  Clock::time_point start;
  std::optional<double> limit;
  bool timed_out = false;

  const LeafInspector* inspector = nullptr;

  explicit EnumSearch(const Instance& inst, std::optional<double> time_limit)
      : instance(inst),
        ops(kernels::active()),
        adj(detail::build_adjacency(inst)),
        n(inst.vertex_count()),
        k(static_cast<std::size_t>(inst.dim())),
        want(inst.vertex_count() / 2 - 1),
        side(static_cast<std::size_t>(inst.vertex_count()) + 1, 0),
        sums(k, 0),
        start(Clock::now()),
        limit(time_limit) {
    members.reserve(static_cast<std::size_t>(n) / 2);
    members.push_back(1);
    side[1] = 1;
    for (const auto& inc : adj[1])
      ops.add_row(sums.data(), instance.weight_row(inc.edge).data(), k);
  }

  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  // Moving v across the partition toggles the cut status of each incident
  // edge whose other endpoint stays put, which here is all of them.
  void flip(std::int32_t v) {
    const std::uint8_t v_side = side[static_cast<std::size_t>(v)];
    for (const auto& inc : adj[static_cast<std::size_t>(v)]) {
      if (side[static_cast<std::size_t>(inc.other)] == v_side)
        ops.add_row(sums.data(), instance.weight_row(inc.edge).data(), k);
      else
        ops.sub_row(sums.data(), instance.weight_row(inc.edge).data(), k);
    }
    side[static_cast<std::size_t>(v)] = v_side ^ 1;
  }

  void leaf() {
    ++explored;
    if (inspector && *inspector) (*inspector)(members, sums);
    const std::int64_t value = ops.min_reduce(sums.data(), k);
    if (value > best_value) {
      best_value = value;
      best_members = members;
      time_to_best = elapsed();
    }
    if (limit && elapsed() >= *limit) timed_out = true;
  }

  void scan(std::int32_t first, std::int32_t chosen) {
    if (chosen == want) {
      leaf();
      return;
    }
    for (std::int32_t v = first; v <= n - (want - chosen) + 1; ++v) {
      flip(v);
      members.push_back(v);
      scan(v + 1, chosen + 1);
      members.pop_back();
      flip(v);
      if (timed_out) return;
    }
  }
};

}  // namespace

SolveResult solve_enumeration(const Instance& instance,
                              std::optional<double> time_limit_s,
                              const LeafInspector& inspector) {
  EnumSearch search(instance, time_limit_s);
  search.inspector = &inspector;
  search.scan(2, 0);

  SolveResult result{
      .status = search.timed_out ? SolveResult::Status::TimeLimit
                                 : SolveResult::Status::Optimal,
      .best_value = Weight::from_milli(search.best_value),
      .best_bisection = Bisection(instance.vertex_count(),
                                  std::move(search.best_members)),
      .explored = search.explored,
      .time_to_best = search.time_to_best,
      .time_total = search.elapsed(),
  };
  return result;
}

SolveResult solve_enumeration(const Instance& instance,
                              std::optional<double> time_limit_s) {
  return solve_enumeration(instance, time_limit_s, LeafInspector{});
}

}  // namespace mmbp
