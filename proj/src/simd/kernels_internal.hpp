#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "cimat/errors.hpp"
#include "cimat/simd/kernels.hpp"

namespace cimat::simd::detail {

// Factors multiplied in plain doubles before folding into the scaled
// accumulator. Only 2^±(1022/16) per factor is safe, so blocks that leave the
// normal range are redone factor by factor.
inline constexpr std::size_t kProductBlock = 16;

inline double checked_difference(double x, double node) {
  const double d = x - node;
  if (!std::isfinite(d)) throw DomainError("difference of nodes overflows double");
  return d;
}

inline void fold_block_exact(ScaledDouble& acc, const double* nodes, std::size_t count, double x) {
  for (std::size_t i = 0; i < count; ++i) acc *= checked_difference(x, nodes[i]);
}

inline ScaledDouble product_of_differences_reference(const double* nodes, std::size_t count, double x) {
  ScaledDouble acc;
  for (std::size_t start = 0; start < count; start += kProductBlock) {
    const std::size_t len = std::min(kProductBlock, count - start);
    double p = 1.0;
    for (std::size_t i = 0; i < len; ++i) p *= checked_difference(x, nodes[start + i]);
    if (p == 0.0) return ScaledDouble{0.0, 0};
    if (std::isnormal(p)) {
      acc *= p;
    } else {
      fold_block_exact(acc, nodes + start, len, x);
    }
  }
  return acc;
}

const KernelTable* avx2_table_if_compiled();
const KernelTable* neon_table_if_compiled();

}  // namespace cimat::simd::detail
