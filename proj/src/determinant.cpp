#include "cimat/determinant.hpp"

#include <cmath>
#include <utility>

#include "cimat/simd/kernels.hpp"

namespace cimat {

simd::ScaledDouble lu_determinant(std::span<double> data, std::size_t n, double pivot_threshold) {
  if (data.size() != n * n) throw ShapeError("lu_determinant: buffer is not n x n");
  if (n == 0) throw ShapeError("lu_determinant: empty matrix");
  for (double v : data) {
    if (!std::isfinite(v)) throw DomainError("lu_determinant: non-finite entry");
  }
  const auto& kernels = simd::active_kernels();
  simd::ScaledDouble det;
  auto at = [&](std::size_t r, std::size_t c) -> double& { return data[r * n + c]; };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    double best = std::fabs(at(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double mag = std::fabs(at(r, k));
      if (mag > best) {
        best = mag;
        pivot_row = r;
      }
    }
    if (best < pivot_threshold) return simd::ScaledDouble{0.0, 0};
    if (pivot_row != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(pivot_row, c));
      det = -det;
    }
    const double pivot = at(k, k);
    det *= pivot;
    const std::size_t tail = n - k - 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = at(r, k) / pivot;
      if (factor != 0.0) kernels.axpy_sub(&at(r, k + 1), &at(k, k + 1), factor, tail);
    }
  }
  return det;
}

simd::ScaledDouble det_oracle_float_scaled(const Matrix<Float64>& m, double pivot_threshold) {
  require_square(m.rows(), m.cols(), "det_oracle_float");
  std::vector<double> buffer;
  buffer.reserve(m.rows() * m.cols());
  for (const Float64& v : m.data()) buffer.push_back(v.value());
  return lu_determinant(buffer, m.rows(), pivot_threshold);
}

Float64 det_oracle_float(const Matrix<Float64>& m, double pivot_threshold) {
  const double v = det_oracle_float_scaled(m, pivot_threshold).to_double();
  if (!std::isfinite(v)) throw DomainError("determinant overflows double; use the scaled variant");
  return Float64(v);
}

}  // namespace cimat
