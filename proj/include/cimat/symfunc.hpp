#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cimat/errors.hpp"
#include "cimat/multipoly.hpp"
#include "cimat/ring.hpp"
#include "cimat/simd/kernels.hpp"

namespace cimat {

/// The ordered nodes u_1..u_n (n >= 1). Public indexing is 1-based.
template <RingScalar T>
class NodeList {
 public:
  explicit NodeList(std::vector<T> values) : values_(std::move(values)) {
    if (values_.empty()) throw ShapeError("node list must hold at least one node");
  }

  std::size_t size() const { return values_.size(); }
  const T& at(std::size_t k) const {
    check_index(k);
    return values_[k - 1];
  }
  std::span<const T> values() const { return values_; }

  /// The nodes with u_k removed, in their original order.
  std::vector<T> without(std::size_t k) const {
    check_index(k);
    std::vector<T> rest;
    rest.reserve(values_.size() - 1);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i != k - 1) rest.push_back(values_[i]);
    }
    return rest;
  }

  /// Node list whose i-th node is u_{sigma[i]}; `sigma` holds 1-based indices.
  NodeList permuted(std::span<const std::size_t> sigma) const {
    if (sigma.size() != values_.size()) throw ShapeError("permutation length mismatch");
    std::vector<T> out;
    out.reserve(values_.size());
    for (std::size_t s : sigma) out.push_back(at(s));
    return NodeList(std::move(out));
  }

  void check_index(std::size_t k) const {
    if (k < 1 || k > values_.size()) {
      throw ShapeError("node index " + std::to_string(k) + " out of range 1.." +
                       std::to_string(values_.size()));
    }
  }

 private:
  std::vector<T> values_;
};

/// u_1..u_n as polynomial variables in n unknowns.
NodeList<MultiPoly> symbolic_nodes(std::size_t n);

/// e[m] = e_m(nodes) for m = 0..n.
template <RingScalar T>
struct ElemSymTable {
  std::vector<T> e;

  std::size_t degree() const { return e.size() - 1; }
  const T& operator[](std::size_t m) const { return e[m]; }
};

enum class LeaveOneOutMode { stable, deflate };

/// Exact scalars deflate (cheap and exact); floats recompute, since the
/// deflation recurrence cancels badly when u_k dominates.
template <RingScalar T>
constexpr LeaveOneOutMode default_mode() {
  return is_exact_scalar_v<T> ? LeaveOneOutMode::deflate : LeaveOneOutMode::stable;
}

namespace detail {

inline Float64 checked(double v) { return Float64(v); }

template <RingScalar T>
std::vector<T> elem_sym_of(std::span<const T> values, const T& like) {
  const std::size_t n = values.size();
  if constexpr (std::is_same_v<T, Float64>) {
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    const auto& kernels = simd::active_kernels();
    for (std::size_t i = 0; i < n; ++i) kernels.elem_sym_insert(e.data(), i + 1, values[i].value());
    std::vector<Float64> out;
    out.reserve(n + 1);
    for (double v : e) out.push_back(checked(v));  // throws on overflow
    return out;
  } else {
    std::vector<T> e(n + 1, zero_like(like));
    e[0] = one_like(like);
    // Insertion recurrence, descending so each step reads the previous e[m-1].
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t m = i + 1; m >= 1; --m) e[m] = e[m] + values[i] * e[m - 1];
    }
    return e;
  }
}

}  // namespace detail

template <RingScalar T>
ElemSymTable<T> elem_sym_all(const NodeList<T>& nodes) {
  return {detail::elem_sym_of<T>(nodes.values(), nodes.at(1))};
}

/// e_m of the nodes without u_k, for m = 0..n-1, using an existing full table
/// in deflate mode: e'[m] = e[m] - u_k * e'[m-1].
template <RingScalar T>
std::vector<T> elem_sym_leave_one_out(const NodeList<T>& nodes, std::size_t k, LeaveOneOutMode mode,
                                      const ElemSymTable<T>& full) {
  nodes.check_index(k);
  const std::size_t n = nodes.size();
  if (mode == LeaveOneOutMode::stable) {
    const std::vector<T> rest = nodes.without(k);
    return detail::elem_sym_of<T>(std::span<const T>(rest), nodes.at(1));
  }
  if (full.e.size() != n + 1) throw ShapeError("symmetric table does not match node count");
  const T& uk = nodes.at(k);
  std::vector<T> out;
  out.reserve(n);
  out.push_back(one_like(uk));
  for (std::size_t m = 1; m < n; ++m) out.push_back(full[m] - uk * out[m - 1]);
  return out;
}

template <RingScalar T>
std::vector<T> elem_sym_leave_one_out(const NodeList<T>& nodes, std::size_t k,
                                      LeaveOneOutMode mode = default_mode<T>()) {
  nodes.check_index(k);
  if (mode == LeaveOneOutMode::stable) return elem_sym_leave_one_out(nodes, k, mode, ElemSymTable<T>{});
  return elem_sym_leave_one_out(nodes, k, mode, elem_sym_all(nodes));
}

/// Largest residual of e_m(all) = e_m(without u_k) + u_k * e_{m-1}(without u_k)
/// over m = 0..n, with the leave-one-out side recomputed from scratch.
/// Unordered rings (polynomials) report the first nonzero residual instead,
/// or zero when the identity holds throughout.
template <RingScalar T>
T deflation_consistency_check(const NodeList<T>& nodes, std::size_t k) {
  const std::size_t n = nodes.size();
  const ElemSymTable<T> full = elem_sym_all(nodes);
  const std::vector<T> rest = elem_sym_leave_one_out(nodes, k, LeaveOneOutMode::stable);
  const T& uk = nodes.at(k);
  const T zero = zero_like(uk);
  T worst = zero;
  for (std::size_t m = 0; m <= n; ++m) {
    const T own = m < n ? rest[m] : zero;
    const T lower = m >= 1 ? rest[m - 1] : zero;
    const T residual = full[m] - (own + uk * lower);
    if constexpr (OrderedRing<T>) {
      const T mag = abs(residual);
      if (worst < mag) worst = mag;
    } else {
      if (worst == zero && !(residual == zero)) worst = residual;
    }
  }
  return worst;
}

}  // namespace cimat
