// NEON (AArch64) variants. Uses separate multiply and add so the elementwise
// kernels round exactly like the scalar reference.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace cimat::simd {
namespace {

void elem_sym_insert(double* e, std::size_t len, double x) {
  const float64x2_t vx = vdupq_n_f64(x);
  std::size_t m = len;
  while (m >= 2) {
    const float64x2_t cur = vld1q_f64(e + m - 1);
    const float64x2_t prev = vld1q_f64(e + m - 2);
    vst1q_f64(e + m - 1, vaddq_f64(cur, vmulq_f64(vx, prev)));
    m -= 2;
  }
  for (; m >= 1; --m) e[m] = e[m] + x * e[m - 1];
}

void axpy_sub(double* y, const double* x, double factor, std::size_t len) {
  const float64x2_t vf = vdupq_n_f64(factor);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    vst1q_f64(y + i, vsubq_f64(vld1q_f64(y + i), vmulq_f64(vf, vld1q_f64(x + i))));
  }
  for (; i < len; ++i) y[i] = y[i] - factor * x[i];
}

ScaledDouble product_of_differences(const double* nodes, std::size_t count, double x) {
  const float64x2_t vx = vdupq_n_f64(x);
  ScaledDouble acc;
  std::size_t i = 0;
  while (count - i >= 2) {
    const std::size_t steps = std::min(detail::kProductBlock, (count - i) / 2);
    float64x2_t p = vdupq_n_f64(1.0);
    for (std::size_t s = 0; s < steps; ++s, i += 2) {
      p = vmulq_f64(p, vsubq_f64(vx, vld1q_f64(nodes + i)));
    }
    const double lanes[2] = {vgetq_lane_f64(p, 0), vgetq_lane_f64(p, 1)};
    for (double lane : lanes) {
      if (lane == 0.0) return ScaledDouble{0.0, 0};
      if (!std::isnormal(lane)) return detail::product_of_differences_reference(nodes, count, x);
    }
    for (double lane : lanes) acc *= lane;
  }
  for (; i < count; ++i) acc *= detail::checked_difference(x, nodes[i]);
  return acc;
}

constexpr KernelTable kNeon{Isa::neon, elem_sym_insert, axpy_sub, product_of_differences};

}  // namespace

namespace detail {
const KernelTable* neon_table_if_compiled() { return &kNeon; }
}  // namespace detail

}  // namespace cimat::simd
