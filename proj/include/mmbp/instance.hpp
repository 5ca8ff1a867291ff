#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmbp/weight.hpp"

namespace mmbp {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undirected edge with 1-based endpoints, u < v.
struct Edge {
  std::int32_t u = 0;
  std::int32_t v = 0;
  auto operator<=>(const Edge&) const = default;
};

// A graph on an even number of vertices whose edges carry k positive
// weights each, stored in milli-units. Immutable after construction; edges
// are kept sorted ascending by (u, v) with their weight rows alongside.
class Instance {
 public:
  // Validates and canonicalizes. weights_milli is row-major, one k-row per
  // edge in the order edges are passed. Throws std::invalid_argument on:
  // odd or non-positive n, k < 1, endpoint out of range or u >= v,
  // duplicate edges, non-positive weights, wrong weight count.
  Instance(std::int32_t vertex_count, std::int32_t dim,
           std::vector<Edge> edges, std::vector<std::int64_t> weights_milli);

  std::int32_t vertex_count() const { return n_; }
  std::int32_t dim() const { return k_; }
  std::int32_t edge_count() const { return static_cast<std::int32_t>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::int32_t e) const { return edges_[static_cast<std::size_t>(e)]; }

  // Weight row of edge e: k milli-unit values.
  std::span<const std::int64_t> weight_row(std::int32_t e) const {
    return {weights_.data() + static_cast<std::size_t>(e) * k_,
            static_cast<std::size_t>(k_)};
  }
  const std::vector<std::int64_t>& weights_milli() const { return weights_; }

  // Per-coordinate sum over all edges; the trivial cut-weight upper bound.
  const std::vector<std::int64_t>& total_sums() const { return totals_; }

  bool operator==(const Instance& other) const {
    return n_ == other.n_ && k_ == other.k_ && edges_ == other.edges_ &&
           weights_ == other.weights_;
  }

 private:
  std::int32_t n_ = 0;
  std::int32_t k_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> totals_;
};

// Native instance file format:
//   line 1: "n m k"
//   then m lines "u v w_1 ... w_k", weights with three fraction digits.
// parse accepts weights with up to three fraction digits and edges in any
// order; serialize emits the canonical form (sorted edges, exactly three
// fraction digits, LF endings). parse(serialize(I)) == I, and serialize is
// byte-identical on canonical files.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& instance, const std::string& path);

// Same graph, each edge keeping only its first k_prime weight coordinates.
// Throws std::invalid_argument unless 1 <= k_prime <= instance.dim().
Instance prefix_instance(const Instance& instance, std::int32_t k_prime);

// A balanced vertex subset in canonical form: |members| = n/2, sorted,
// containing vertex 1. Construction accepts either representative of the
// complementary pair and canonicalizes, since C(S) = C(V \ S).
class Bisection {
 public:
  Bisection(std::int32_t vertex_count, std::vector<std::int32_t> members);

  std::int32_t vertex_count() const { return n_; }
  const std::vector<std::int32_t>& members() const { return members_; }

  // 1 where the vertex is in S; index 0 unused.
  std::vector<std::uint8_t> side_mask() const;

  bool operator==(const Bisection&) const = default;

 private:
  std::int32_t n_ = 0;
  std::vector<std::int32_t> members_;
};

struct CutReport {
  std::vector<std::int32_t> cut_edges;       // indices into instance.edges()
  std::vector<Weight> coordinate_sums;       // length k, exact
  Weight weight;                             // min over coordinate_sums
};

// Edges with exactly one endpoint in the given subset. The raw overloads
// accept any subset of V (not necessarily balanced); mask is 1-based with
// mask[0] ignored.
std::vector<std::int32_t> cut_edges_of_mask(const Instance& instance,
                                            std::span<const std::uint8_t> mask);
std::vector<std::int32_t> cut_edges(const Instance& instance,
                                    const Bisection& s);

CutReport cut_report_of_mask(const Instance& instance,
                             std::span<const std::uint8_t> mask);
CutReport cut_weight(const Instance& instance, const Bisection& s);

}  // namespace mmbp
