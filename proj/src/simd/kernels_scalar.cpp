// Reference kernels. Every other variant is tested against these.

#include "kernels_internal.hpp"

namespace cimat::simd {
namespace {

void elem_sym_insert(double* e, std::size_t len, double x) {
  for (std::size_t m = len; m >= 1; --m) e[m] = e[m] + x * e[m - 1];
}

void axpy_sub(double* y, const double* x, double factor, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] = y[i] - factor * x[i];
}

ScaledDouble product_of_differences(const double* nodes, std::size_t count, double x) {
  return detail::product_of_differences_reference(nodes, count, x);
}

constexpr KernelTable kScalar{Isa::scalar, elem_sym_insert, axpy_sub, product_of_differences};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace cimat::simd
