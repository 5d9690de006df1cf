#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string_view>
#include <thread>
#include <type_traits>
#include <vector>

#include "cimat/determinant.hpp"
#include "cimat/matrix.hpp"
#include "cimat/ring.hpp"
#include "cimat/simd/kernels.hpp"
#include "cimat/symfunc.hpp"

namespace cimat {

/// CI-matrix on nodes u_1..u_n: entry (h, k) is e_{n-h} of the nodes other
/// than u_k. Row 1 holds the degree n-1 products, row n is all ones.
template <RingScalar T>
struct CIMatrix {
  NodeList<T> nodes;
  Matrix<T> entries;

  std::size_t n() const { return nodes.size(); }

  /// 1-based (row h, column k).
  const T& entry(std::size_t h, std::size_t k) const { return entries(h - 1, k - 1); }
};

enum class Parallel { no, yes };

namespace detail {

template <class F>
void for_each_index(std::size_t count, Parallel parallel, F&& body) {
  const std::size_t workers =
      parallel == Parallel::yes ? std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency())) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
}

}  // namespace detail

template <RingScalar T>
CIMatrix<T> build_ci_matrix(const NodeList<T>& nodes, LeaveOneOutMode mode = default_mode<T>(),
                            Parallel parallel = Parallel::no) {
  const std::size_t n = nodes.size();
  Matrix<T> entries(n, n, zero_like(nodes.at(1)));
  ElemSymTable<T> full;
  if (mode == LeaveOneOutMode::deflate) full = elem_sym_all(nodes);
  detail::for_each_index(n, parallel, [&](std::size_t col) {
    const std::vector<T> column = elem_sym_leave_one_out(nodes, col + 1, mode, full);
    for (std::size_t h = 1; h <= n; ++h) entries(h - 1, col) = column[n - h];
  });
  return {nodes, std::move(entries)};
}

/// prod_{1<=i<j<=n} (u_j - u_i) over doubles, in scaled form; never builds
/// the matrix.
simd::ScaledDouble det_closed_form_scaled(std::span<const double> nodes);

/// prod_{1<=i<j<=n} (u_j - u_i): O(n^2) ring operations, no matrix.
template <RingScalar T>
T det_closed_form(const NodeList<T>& nodes) {
  if constexpr (std::is_same_v<T, Float64>) {
    std::vector<double> raw;
    raw.reserve(nodes.size());
    for (const Float64& v : nodes.values()) raw.push_back(v.value());
    const double value = det_closed_form_scaled(raw).to_double();
    return Float64(value);  // throws when the product leaves double range
  } else {
    const auto values = nodes.values();
    T product = one_like(values[0]);
    for (std::size_t j = 1; j < values.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) product = product * (values[j] - values[i]);
    }
    return product;
  }
}

enum class OracleKind { bareiss, lu, cofactor };

std::string_view oracle_name(OracleKind kind);

template <RingScalar T>
struct DetReport {
  T closed_form;
  T oracle;
  T discrepancy;  // |closed_form - oracle|, or the raw difference in unordered rings
  bool exact_match;
  OracleKind oracle_kind;
};

/// Closed form against an independent determinant of the built matrix.
/// Bareiss needs exact division, LU needs Float64, cofactor works anywhere.
template <RingScalar T>
DetReport<T> det_report(const NodeList<T>& nodes, OracleKind kind) {
  const T closed = det_closed_form(nodes);
  const CIMatrix<T> m = build_ci_matrix(nodes);
  T oracle = closed;
  switch (kind) {
    case OracleKind::bareiss:
      if constexpr (ExactDivisionRing<T> && is_exact_scalar_v<T>) {
        oracle = det_oracle_exact(m.entries);
      } else {
        throw ShapeError("bareiss oracle needs an exact division ring");
      }
      break;
    case OracleKind::lu:
      if constexpr (std::is_same_v<T, Float64>) {
        oracle = det_oracle_float(m.entries);
      } else {
        throw ShapeError("lu oracle needs float64 scalars");
      }
      break;
    case OracleKind::cofactor:
      oracle = det_oracle_cofactor(m.entries, std::max<std::size_t>(kDefaultSymbolicCap, nodes.size()));
      break;
  }
  T diff = closed - oracle;
  if constexpr (OrderedRing<T>) diff = abs(diff);
  return {closed, oracle, diff, closed == oracle, kind};
}

template <RingScalar T>
struct DualityResidual {
  T max_offdiag_abs;  // worst |sum| for j != k
  T max_offdiag_rel;  // same, divided by the sum of the magnitudes of its terms
  T max_diag_rel;     // worst |sum - prod_{i != k}(u_k - u_i)| / |prod|
};

/// Evaluates sum_h (-1)^{n-h} u_j^{h-1} M[h][k] for every (j, k). Column k of
/// the CI-matrix holds the signed coefficients of prod_{i != k}(x - u_i), so
/// the sum is zero off the diagonal and prod_{i != k}(u_k - u_i) on it.
template <OrderedRing T>
  requires requires(const T& a, const T& b) { a / b; }
DualityResidual<T> vandermonde_duality_residual(const NodeList<T>& nodes) {
  const std::size_t n = nodes.size();
  const CIMatrix<T> m = build_ci_matrix(nodes);
  const T zero = zero_like(nodes.at(1));
  const T one = one_like(zero);
  DualityResidual<T> out{zero, zero, zero};
  std::vector<T> weights(n, zero);  // (-1)^{n-h} u_j^{h-1}, h = 1..n
  for (std::size_t j = 1; j <= n; ++j) {
    T power = one;
    for (std::size_t h = 1; h <= n; ++h) {
      weights[h - 1] = (n - h) % 2 == 0 ? power : -power;
      power = power * nodes.at(j);
    }
    for (std::size_t k = 1; k <= n; ++k) {
      T sum = zero;
      T magnitude = zero;
      for (std::size_t h = 1; h <= n; ++h) {
        const T term = weights[h - 1] * m.entry(h, k);
        sum = sum + term;
        magnitude = magnitude + abs(term);
      }
      if (j != k) {
        const T a = abs(sum);
        if (out.max_offdiag_abs < a) out.max_offdiag_abs = a;
        const T r = magnitude == zero ? zero : a / magnitude;
        if (out.max_offdiag_rel < r) out.max_offdiag_rel = r;
      } else {
        T expected = one;
        for (std::size_t i = 1; i <= n; ++i) {
          if (i != k) expected = expected * (nodes.at(k) - nodes.at(i));
        }
        const T err = abs(sum - expected);
        const T r = expected == zero ? err : err / abs(expected);
        if (out.max_diag_rel < r) out.max_diag_rel = r;
      }
    }
  }
  return out;
}

}  // namespace cimat
