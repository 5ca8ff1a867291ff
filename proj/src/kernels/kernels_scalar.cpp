#include "mmbp/kernels.hpp"

namespace mmbp::kernels {

namespace {

void add_row_scalar(std::int64_t* acc, const std::int64_t* row,
                    std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) acc[i] += row[i];
}

void sub_row_scalar(std::int64_t* acc, const std::int64_t* row,
                    std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) acc[i] -= row[i];
}

std::int64_t min_reduce_scalar(const std::int64_t* v, std::size_t k) {
  std::int64_t m = v[0];
  for (std::size_t i = 1; i < k; ++i)
    if (v[i] < m) m = v[i];
  return m;
}

std::int64_t add_min_scalar(const std::int64_t* a, const std::int64_t* b,
                            std::size_t k) {
  std::int64_t m = a[0] + b[0];
  for (std::size_t i = 1; i < k; ++i) {
    const std::int64_t s = a[i] + b[i];
    if (s < m) m = s;
  }
  return m;
}

std::int64_t sub_min_scalar(const std::int64_t* a, const std::int64_t* b,
                            std::size_t k) {
  std::int64_t m = a[0] - b[0];
  for (std::size_t i = 1; i < k; ++i) {
    const std::int64_t d = a[i] - b[i];
    if (d < m) m = d;
  }
  return m;
}

constexpr Ops kScalarOps = {
    "scalar",        add_row_scalar, sub_row_scalar,
    min_reduce_scalar, add_min_scalar, sub_min_scalar,
};

}  // namespace

const Ops& scalar() { return kScalarOps; }

}  // namespace mmbp::kernels
