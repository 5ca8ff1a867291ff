#include "mmbp/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

namespace mmbp {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

namespace {

// Unordered pairs {u,v}, 1 <= u < v <= n, ordered lexicographically.
// Row u holds pairs (u, u+1..n); offset(u) pairs precede it.
std::uint64_t row_offset(std::uint64_t u, std::uint64_t n) {
  return (u - 1) * n - u * (u - 1) / 2;
}

Edge decode_pair(std::uint64_t index, std::int32_t n) {
  std::uint64_t lo = 1, hi = static_cast<std::uint64_t>(n) - 1;
  // Largest u with row_offset(u) <= index.
  while (lo < hi) {
    const std::uint64_t mid = (lo + hi + 1) / 2;
    if (row_offset(mid, static_cast<std::uint64_t>(n)) <= index)
      lo = mid;
    else
      hi = mid - 1;
  }
  const std::uint64_t u = lo;
  const std::uint64_t v = u + 1 + (index - row_offset(u, static_cast<std::uint64_t>(n)));
  return {static_cast<std::int32_t>(u), static_cast<std::int32_t>(v)};
}

}  // namespace

Instance generate(const GenConfig& config) {
  const std::int32_t n = config.vertex_count;
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("generator: vertex count must be positive and even");
  if (config.dim < 1)
    throw std::invalid_argument("generator: dimension must be positive");
  if (config.weight_min_milli <= 0 ||
      config.weight_min_milli > config.weight_max_milli)
    throw std::invalid_argument("generator: need 0 < weight_min <= weight_max");
  const std::uint64_t max_edges =
      static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
  if (config.edge_count < 0 ||
      static_cast<std::uint64_t>(config.edge_count) > max_edges)
    throw std::invalid_argument("generator: edge count " +
                                std::to_string(config.edge_count) +
                                " exceeds n(n-1)/2 = " +
                                std::to_string(max_edges));

  SplitMix64 rng{config.seed};

  // Partial Fisher-Yates over the pair index space, sparse so that huge
  // vertex counts do not materialize all n(n-1)/2 indices.
  const std::uint64_t m = static_cast<std::uint64_t>(config.edge_count);
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  displaced.reserve(m * 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + rng.next_below(max_edges - i);
    const auto it_j = displaced.find(j);
    const std::uint64_t val_j = it_j == displaced.end() ? j : it_j->second;
    const auto it_i = displaced.find(i);
    const std::uint64_t val_i = it_i == displaced.end() ? i : it_i->second;
    displaced[j] = val_i;
    edges.push_back(decode_pair(val_j, n));
  }
  std::sort(edges.begin(), edges.end());

  // Weights are drawn after sorting so the instance depends only on the
  // chosen edge set, not on selection order.
  const std::uint64_t grid =
      static_cast<std::uint64_t>(config.weight_max_milli -
                                 config.weight_min_milli) + 1;
  std::vector<std::int64_t> weights;
  weights.reserve(m * static_cast<std::uint64_t>(config.dim));
  for (std::uint64_t e = 0; e < m; ++e)
    for (std::int32_t l = 0; l < config.dim; ++l)
      weights.push_back(config.weight_min_milli +
                        static_cast<std::int64_t>(rng.next_below(grid)));

  return Instance(n, config.dim, std::move(edges), std::move(weights));
}

std::vector<std::pair<std::string, GenConfig>> paper_suite(
    std::uint64_t base_seed) {
  static constexpr struct {
    std::int32_t n;
    std::int64_t m;
  } kShapes[] = {
      {10, 15},     {10, 25},     {10, 40},      {20, 30},    {20, 70},
      {20, 150},    {30, 50},     {30, 150},     {30, 400},   {50, 80},
      {50, 300},    {50, 1000},   {100, 150},    {100, 500},  {100, 3000},
      {300, 500},   {300, 2000},  {300, 10000},  {300, 30000},
      {500, 1000},  {500, 3000},  {500, 10000},  {500, 60000},
      {1000, 1500}, {1000, 10000}, {1000, 100000}, {1000, 350000},
  };

  SplitMix64 seeder{base_seed};
  std::vector<std::pair<std::string, GenConfig>> suite;
  suite.reserve(std::size(kShapes));
  for (const auto& shape : kShapes) {
    char name[32];
    std::snprintf(name, sizeof(name), "%03d_%03lld", shape.n,
                  static_cast<long long>(shape.m));
    GenConfig config;
    config.vertex_count = shape.n;
    config.edge_count = shape.m;
    config.dim = 20;
    config.weight_min_milli = 1000;
    config.weight_max_milli = 9999;
    config.seed = seeder.next();
    suite.emplace_back(name, config);
  }
  return suite;
}

}  // namespace mmbp
