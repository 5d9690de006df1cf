#include "cimat/ci_matrix.hpp"

#include <cmath>

namespace cimat {

NodeList<MultiPoly> symbolic_nodes(std::size_t n) {
  if (n < 1) throw ShapeError("symbolic node list needs n >= 1");
  std::vector<MultiPoly> vars;
  vars.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) vars.push_back(MultiPoly::variable(n, i));
  return NodeList<MultiPoly>(std::move(vars));
}

simd::ScaledDouble det_closed_form_scaled(std::span<const double> nodes) {
  if (nodes.empty()) throw ShapeError("node list must hold at least one node");
  for (double v : nodes) {
    if (!std::isfinite(v)) throw DomainError("non-finite node");
  }
  const auto& kernels = simd::active_kernels();
  simd::ScaledDouble det;
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    det *= kernels.product_of_differences(nodes.data(), j, nodes[j]);
    if (det.is_zero()) break;
  }
  return det;
}

std::string_view oracle_name(OracleKind kind) {
  switch (kind) {
    case OracleKind::bareiss: return "bareiss";
    case OracleKind::lu: return "lu";
    case OracleKind::cofactor: return "cofactor";
  }
  return "unknown";
}

}  // namespace cimat
