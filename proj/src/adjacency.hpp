#pragma once

#include <cstdint>
#include <vector>

#include "mmbp/instance.hpp"

namespace mmbp::detail {

struct IncidentEdge {
  std::int32_t edge;
  std::int32_t other;
};

// 1-based incidence lists (index 0 unused).
inline std::vector<std::vector<IncidentEdge>> build_adjacency(
    const Instance& instance) {
  std::vector<std::vector<IncidentEdge>> adj(
      static_cast<std::size_t>(instance.vertex_count()) + 1);
  for (std::int32_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    adj[static_cast<std::size_t>(edge.u)].push_back({e, edge.v});
    adj[static_cast<std::size_t>(edge.v)].push_back({e, edge.u});
  }
  return adj;
}

}  // namespace mmbp::detail
