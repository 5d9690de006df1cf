#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cimat/errors.hpp"
#include "cimat/float64.hpp"
#include "cimat/matrix.hpp"
#include "cimat/multipoly.hpp"
#include "cimat/ring.hpp"
#include "cimat/simd/scaled_double.hpp"

namespace cimat {

/// Fraction-free Bareiss elimination. Every division is exact over an
/// integral domain; over Rational it also keeps intermediates small.
template <ExactDivisionRing T>
T det_oracle_exact(Matrix<T> m) {
  require_square(m.rows(), m.cols(), "det_oracle_exact");
  const std::size_t n = m.rows();
  if (n == 0) throw ShapeError("det_oracle_exact: empty matrix");
  const T zero = zero_like(m(0, 0));
  T previous = one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == zero) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == zero) ++r;
      if (r == n) return zero;
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      }
      m(i, k) = zero;
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

inline constexpr double kDefaultPivotThreshold = 1e-300;

/// Determinant of a row-major n x n block by LU with partial pivoting, in
/// scaled form. A pivot of magnitude below `pivot_threshold` yields zero.
/// Row updates go through the active SIMD kernels; `data` is overwritten.
simd::ScaledDouble lu_determinant(std::span<double> data, std::size_t n,
                                  double pivot_threshold = kDefaultPivotThreshold);

/// LU determinant of a float matrix. Throws DomainError if the value does
/// not fit in a double.
Float64 det_oracle_float(const Matrix<Float64>& m, double pivot_threshold = kDefaultPivotThreshold);

/// Same, returning the scaled value.
simd::ScaledDouble det_oracle_float_scaled(const Matrix<Float64>& m,
                                           double pivot_threshold = kDefaultPivotThreshold);

inline constexpr std::size_t kDefaultSymbolicCap = 7;

/// Laplace expansion along rows, memoized on the set of columns still in
/// play: O(n 2^n) ring multiplications. Works in any commutative ring.
template <RingScalar T>
T det_oracle_cofactor(const Matrix<T>& m, std::size_t cap = kDefaultSymbolicCap) {
  require_square(m.rows(), m.cols(), "det_oracle_cofactor");
  const std::size_t n = m.rows();
  if (n == 0) throw ShapeError("det_oracle_cofactor: empty matrix");
  if (n > cap || n >= 31) {
    throw ShapeError("det_oracle_cofactor: size " + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  }
  const T zero = zero_like(m(0, 0));
  // minors[S] = det of the bottom popcount(S) rows restricted to columns S.
  std::vector<T> minors(std::size_t{1} << n, zero);
  minors[0] = one_like(m(0, 0));
  for (std::uint32_t set = 1; set < (std::uint32_t{1} << n); ++set) {
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(set));
    T sum = zero;
    bool negative = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(set & (std::uint32_t{1} << c))) continue;
      const T& entry = m(row, c);
      if (!(entry == zero)) {
        const T term = entry * minors[set & ~(std::uint32_t{1} << c)];
        sum = negative ? sum - term : sum + term;
      }
      negative = !negative;
    }
    minors[set] = sum;
  }
  return minors.back();
}

/// Exact symbolic determinant (cofactor route; Bareiss would need
/// polynomial division).
inline MultiPoly det_oracle_symbolic(const Matrix<MultiPoly>& m, std::size_t cap = kDefaultSymbolicCap) {
  return det_oracle_cofactor(m, cap);
}

}  // namespace cimat
