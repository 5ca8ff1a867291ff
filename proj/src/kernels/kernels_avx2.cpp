#include "mmbp/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace mmbp::kernels {

namespace {

// 64-bit lane minimum; AVX2 has no vpminsq, so compare + blend.
[[gnu::target("avx2")]] inline __m256i min_epi64(__m256i a, __m256i b) {
  const __m256i a_gt_b = _mm256_cmpgt_epi64(a, b);
  return _mm256_blendv_epi8(a, b, a_gt_b);
}

[[gnu::target("avx2")]] inline std::int64_t hmin_epi64(__m256i v) {
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::int64_t m = lanes[0];
  if (lanes[1] < m) m = lanes[1];
  if (lanes[2] < m) m = lanes[2];
  if (lanes[3] < m) m = lanes[3];
  return m;
}

[[gnu::target("avx2")]] void add_row_avx2(std::int64_t* acc,
                                          const std::int64_t* row,
                                          std::size_t k) {
  std::size_t i = 0;
  for (; i + 4 <= k; i += 4) {
    const __m256i a =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i r =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i),
                        _mm256_add_epi64(a, r));
  }
  for (; i < k; ++i) acc[i] += row[i];
}

[[gnu::target("avx2")]] void sub_row_avx2(std::int64_t* acc,
                                          const std::int64_t* row,
                                          std::size_t k) {
  std::size_t i = 0;
  for (; i + 4 <= k; i += 4) {
    const __m256i a =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i r =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i),
                        _mm256_sub_epi64(a, r));
  }
  for (; i < k; ++i) acc[i] -= row[i];
}

[[gnu::target("avx2")]] std::int64_t min_reduce_avx2(const std::int64_t* v,
                                                     std::size_t k) {
  std::size_t i = 0;
  std::int64_t m = v[0];
  if (k >= 4) {
    __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v));
    for (i = 4; i + 4 <= k; i += 4)
      vm = min_epi64(vm,
                     _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
    m = hmin_epi64(vm);
  } else {
    i = 1;
  }
  for (; i < k; ++i)
    if (v[i] < m) m = v[i];
  return m;
}

[[gnu::target("avx2")]] std::int64_t add_min_avx2(const std::int64_t* a,
                                                  const std::int64_t* b,
                                                  std::size_t k) {
  std::size_t i = 0;
  std::int64_t m = a[0] + b[0];
  if (k >= 4) {
    __m256i vm = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a)),
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b)));
    for (i = 4; i + 4 <= k; i += 4) {
      const __m256i s = _mm256_add_epi64(
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
      vm = min_epi64(vm, s);
    }
    m = hmin_epi64(vm);
  } else {
    i = 1;
  }
  for (; i < k; ++i) {
    const std::int64_t s = a[i] + b[i];
    if (s < m) m = s;
  }
  return m;
}

[[gnu::target("avx2")]] std::int64_t sub_min_avx2(const std::int64_t* a,
                                                  const std::int64_t* b,
                                                  std::size_t k) {
  std::size_t i = 0;
  std::int64_t m = a[0] - b[0];
  if (k >= 4) {
    __m256i vm = _mm256_sub_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a)),
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b)));
    for (i = 4; i + 4 <= k; i += 4) {
      const __m256i d = _mm256_sub_epi64(
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
      vm = min_epi64(vm, d);
    }
    m = hmin_epi64(vm);
  } else {
    i = 1;
  }
  for (; i < k; ++i) {
    const std::int64_t d = a[i] - b[i];
    if (d < m) m = d;
  }
  return m;
}

constexpr Ops kAvx2Ops = {
    "avx2",          add_row_avx2, sub_row_avx2,
    min_reduce_avx2, add_min_avx2, sub_min_avx2,
};

}  // namespace

const Ops* avx2() {
  static const Ops* ops =
      __builtin_cpu_supports("avx2") ? &kAvx2Ops : nullptr;
  return ops;
}

}  // namespace mmbp::kernels

#else

namespace mmbp::kernels {
const Ops* avx2() { return nullptr; }
}  // namespace mmbp::kernels

#endif
