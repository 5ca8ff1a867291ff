#include "mmbp/kernels.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

namespace mmbp::kernels {

namespace {

// NEON has no 64-bit integer min; compare + select.
inline int64x2_t min_s64(int64x2_t a, int64x2_t b) {
  const uint64x2_t a_gt_b = vcgtq_s64(a, b);
  return vbslq_s64(a_gt_b, b, a);
}

inline std::int64_t hmin_s64(int64x2_t v) {
  const std::int64_t lo = vgetq_lane_s64(v, 0);
  const std::int64_t hi = vgetq_lane_s64(v, 1);
  return hi < lo ? hi : lo;
}

void add_row_neon(std::int64_t* acc, const std::int64_t* row, std::size_t k) {
  std::size_t i = 0;
  for (; i + 2 <= k; i += 2)
    vst1q_s64(acc + i, vaddq_s64(vld1q_s64(acc + i), vld1q_s64(row + i)));
  for (; i < k; ++i) acc[i] += row[i];
}

void sub_row_neon(std::int64_t* acc, const std::int64_t* row, std::size_t k) {
  std::size_t i = 0;
  for (; i + 2 <= k; i += 2)
    vst1q_s64(acc + i, vsubq_s64(vld1q_s64(acc + i), vld1q_s64(row + i)));
  for (; i < k; ++i) acc[i] -= row[i];
}

std::int64_t min_reduce_neon(const std::int64_t* v, std::size_t k) {
  std::size_t i = 0;
  std::int64_t m = v[0];
  if (k >= 2) {
    int64x2_t vm = vld1q_s64(v);
    for (i = 2; i + 2 <= k; i += 2) vm = min_s64(vm, vld1q_s64(v + i));
    m = hmin_s64(vm);
  } else {
    i = 1;
  }
  for (; i < k; ++i)
    if (v[i] < m) m = v[i];
  return m;
}

std::int64_t add_min_neon(const std::int64_t* a, const std::int64_t* b,
                          std::size_t k) {
  std::size_t i = 0;
  std::int64_t m = a[0] + b[0];
  if (k >= 2) {
    int64x2_t vm = vaddq_s64(vld1q_s64(a), vld1q_s64(b));
    for (i = 2; i + 2 <= k; i += 2)
      vm = min_s64(vm, vaddq_s64(vld1q_s64(a + i), vld1q_s64(b + i)));
    m = hmin_s64(vm);
  } else {
    i = 1;
  }
  for (; i < k; ++i) {
    const std::int64_t s = a[i] + b[i];
    if (s < m) m = s;
  }
  return m;
}

std::int64_t sub_min_neon(const std::int64_t* a, const std::int64_t* b,
                          std::size_t k) {
  std::size_t i = 0;
  std::int64_t m = a[0] - b[0];
  if (k >= 2) {
    int64x2_t vm = vsubq_s64(vld1q_s64(a), vld1q_s64(b));
    for (i = 2; i + 2 <= k; i += 2)
      vm = min_s64(vm, vsubq_s64(vld1q_s64(a + i), vld1q_s64(b + i)));
    m = hmin_s64(vm);
  } else {
    i = 1;
  }
  for (; i < k; ++i) {
    const std::int64_t d = a[i] - b[i];
    if (d < m) m = d;
  }
  return m;
}

constexpr Ops kNeonOps = {
    "neon",          add_row_neon, sub_row_neon,
    min_reduce_neon, add_min_neon, sub_min_neon,
};

}  // namespace

// NEON is baseline on aarch64.
const Ops* neon() { return &kNeonOps; }

}  // namespace mmbp::kernels

#else

namespace mmbp::kernels {
const Ops* neon() { return nullptr; }
}  // namespace mmbp::kernels

#endif
