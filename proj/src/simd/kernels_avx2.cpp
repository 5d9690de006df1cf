// AVX2 variants. Built with -mavx2 only (no FMA) so the elementwise kernels
// round exactly like the scalar reference.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace cimat::simd {
namespace {

void elem_sym_insert(double* e, std::size_t len, double x) {
  const __m256d vx = _mm256_set1_pd(x);
  std::size_t m = len;
  // Walk downward four slots at a time; each store lands above every slot
  // the next iteration reads.
  while (m >= 4) {
    const __m256d cur = _mm256_loadu_pd(e + m - 3);
    const __m256d prev = _mm256_loadu_pd(e + m - 4);
    _mm256_storeu_pd(e + m - 3, _mm256_add_pd(cur, _mm256_mul_pd(vx, prev)));
    m -= 4;
  }
  for (; m >= 1; --m) e[m] = e[m] + x * e[m - 1];
}

void axpy_sub(double* y, const double* x, double factor, std::size_t len) {
  const __m256d vf = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d vxx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_sub_pd(vy, _mm256_mul_pd(vf, vxx)));
  }
  for (; i < len; ++i) y[i] = y[i] - factor * x[i];
}

ScaledDouble product_of_differences(const double* nodes, std::size_t count, double x) {
  const __m256d vx = _mm256_set1_pd(x);
  ScaledDouble acc;
  std::size_t i = 0;
  while (count - i >= 4) {
    const std::size_t steps = std::min(detail::kProductBlock, (count - i) / 4);
    __m256d p = _mm256_set1_pd(1.0);
    for (std::size_t s = 0; s < steps; ++s, i += 4) {
      p = _mm256_mul_pd(p, _mm256_sub_pd(vx, _mm256_loadu_pd(nodes + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, p);
    for (double lane : lanes) {
      if (lane == 0.0) return ScaledDouble{0.0, 0};
      if (!std::isnormal(lane)) return detail::product_of_differences_reference(nodes, count, x);
    }
    for (double lane : lanes) acc *= lane;
  }
  for (; i < count; ++i) acc *= detail::checked_difference(x, nodes[i]);
  return acc;
}

constexpr KernelTable kAvx2{Isa::avx2, elem_sym_insert, axpy_sub, product_of_differences};

}  // namespace

namespace detail {
const KernelTable* avx2_table_if_compiled() { return &kAvx2; }
}  // namespace detail

}  // namespace cimat::simd
