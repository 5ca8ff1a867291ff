#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mmbp::kernels {

// Vector primitives over k-length int64 weight rows (k = weight dimension).
// They carry the hot loops of cut-sum maintenance and bound evaluation:
//   add_row / sub_row  - acc[l] += / -= row[l]
//   min_reduce         - min over coordinates (k >= 1)
//   add_min / sub_min  - min over l of a[l] + b[l] / a[l] - b[l]
// All variants compute bit-identical results; SIMD is a speedup only.
struct Ops {
  const char* name;
  void (*add_row)(std::int64_t* acc, const std::int64_t* row, std::size_t k);
  void (*sub_row)(std::int64_t* acc, const std::int64_t* row, std::size_t k);
  std::int64_t (*min_reduce)(const std::int64_t* v, std::size_t k);
  std::int64_t (*add_min)(const std::int64_t* a, const std::int64_t* b,
                          std::size_t k);
  std::int64_t (*sub_min)(const std::int64_t* a, const std::int64_t* b,
                          std::size_t k);
};

// Portable reference implementation; always available.
const Ops& scalar();

// Arch-specific variants; nullptr when not compiled in or the CPU lacks the
// feature at runtime.
const Ops* avx2();
const Ops* neon();

// All usable variants on this machine, scalar first. Used by the
// equivalence tests.
std::vector<const Ops*> available();

// The variant the solvers use. Picks the widest supported one; the
// MMBP_KERNEL environment variable (scalar|avx2|neon) overrides, falling
// back to scalar with a warning if the requested variant is unusable.
const Ops& active();

}  // namespace mmbp::kernels
