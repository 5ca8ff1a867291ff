#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mmbp/instance.hpp"

namespace mmbp {

// Uniform G(n,m) instance with weights drawn uniformly from the 3-decimal
// grid [weight_min, weight_max]. Deterministic function of the whole config
// including seed, independent of platform and thread count.
struct GenConfig {
  std::int32_t vertex_count = 0;
  std::int64_t edge_count = 0;
  std::int32_t dim = 1;
  std::int64_t weight_min_milli = 1000;  // 1.000
  std::int64_t weight_max_milli = 9999;  // 9.999
  std::uint64_t seed = 0;
};

Instance generate(const GenConfig& config);

// The 27 experiment graph shapes: vertex counts 10..1000 with the published
// edge counts, 20-dimensional weights on the 1.000-9.999 grid. Names are
// "XXX_YYY" (vertex and edge counts, zero-padded to three digits). Each
// config gets its own seed derived from base_seed.
std::vector<std::pair<std::string, GenConfig>> paper_suite(
    std::uint64_t base_seed);

// splitmix64; fixed here so generated instances are reproducible across
// platforms. Standard-library distributions are not portable.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1, via rejection.
  std::uint64_t next_below(std::uint64_t bound);
};

}  // namespace mmbp
