#pragma once

#include <cstddef>
#include <string_view>

#include "cimat/simd/scaled_double.hpp"

namespace cimat::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Double-precision inner loops of the float tier. Every instruction-set
/// variant must agree with the scalar reference: bit-for-bit for the
/// elementwise kernels, to rounding for the product.
struct KernelTable {
  Isa isa;

  /// Inserts node x into an elementary-symmetric table of `len + 1` entries:
  /// e[m] += x * e[m-1] for m = len..1, each update reading the old e[m-1].
  void (*elem_sym_insert)(double* e, std::size_t len, double x);

  /// y[i] -= factor * x[i] for i < len.
  void (*axpy_sub)(double* y, const double* x, double factor, std::size_t len);

  /// prod_{i < count} (x - nodes[i]) in scaled form. Throws DomainError if a
  /// single difference overflows.
  ScaledDouble (*product_of_differences)(const double* nodes, std::size_t count, double x);
};

const KernelTable& scalar_kernels();

/// nullptr when the variant is not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best available table, chosen once at first use. The environment variable
/// CIMAT_SIMD=scalar|avx2|neon forces a variant when it is available.
const KernelTable& active_kernels();

}  // namespace cimat::simd
