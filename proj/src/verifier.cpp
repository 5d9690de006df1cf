#include "cimat/verifier.hpp"

#include <algorithm>
#include <sstream>

namespace cimat {
namespace {

void check_size(std::size_t n, std::size_t cap, std::size_t min_n = 1) {
  if (n < min_n || n > cap) {
    throw ShapeError("verifier size " + std::to_string(n) + " outside " + std::to_string(min_n) +
                     ".." + std::to_string(cap));
  }
}

std::string degrees_text(const std::set<unsigned>& degrees) {
  std::string out = "{";
  for (unsigned d : degrees) {
    if (out.size() > 1) out += ',';
    out += std::to_string(d);
  }
  return out + "}";
}

Matrix<MultiPoly> map_poly(const Matrix<MultiPoly>& m, auto&& f) {
  return map_entries(m, [&](const MultiPoly& p) { return f(p); });
}

// prod_{i in [first, last]} u_i in `arity` variables.
MultiPoly product_of_variables(std::size_t arity, std::size_t first, std::size_t last) {
  MultiPoly p(arity, Rational(1));
  for (std::size_t i = first; i <= last; ++i) p *= MultiPoly::variable(arity, i);
  return p;
}

// prod_{first<=i<j<=last} (u_j - u_i) in `arity` variables.
MultiPoly difference_product(std::size_t arity, std::size_t first, std::size_t last) {
  MultiPoly p(arity, Rational(1));
  for (std::size_t j = first + 1; j <= last; ++j) {
    for (std::size_t i = first; i < j; ++i) {
      p *= MultiPoly::variable(arity, j) - MultiPoly::variable(arity, i);
    }
  }
  return p;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SymbolicInstance SymbolicInstance::make(std::size_t n, std::size_t cap) {
  check_size(n, cap);
  CIMatrix<MultiPoly> m = build_ci_matrix(symbolic_nodes(n));
  MultiPoly det = det_oracle_symbolic(m.entries, std::max(cap, kDefaultSymbolicCap));
  return {n, std::move(m), std::move(det)};
}

CheckResult verify_homogeneity(const SymbolicInstance& inst) {
  const std::set<unsigned> degrees = inst.det.total_degrees();
  const auto expected = static_cast<unsigned>(inst.n * (inst.n - 1) / 2);
  return {"homogeneity", degrees == std::set<unsigned>{expected},
          "degrees=" + degrees_text(degrees) + " expected={" + std::to_string(expected) + "}"};
}

CheckResult verify_homogeneity(std::size_t n, std::size_t cap) {
  return verify_homogeneity(SymbolicInstance::make(n, cap));
}

CheckResult verify_row_degrees(const SymbolicInstance& inst) {
  const std::size_t n = inst.n;
  bool ok = true;
  std::ostringstream witness;
  witness << "row degrees";
  for (std::size_t h = 1; h <= n; ++h) {
    std::set<unsigned> row;
    for (std::size_t k = 1; k <= n; ++k) {
      const auto d = inst.matrix.entry(h, k).total_degrees();
      row.insert(d.begin(), d.end());
      if (d != std::set<unsigned>{static_cast<unsigned>(n - h)}) ok = false;
    }
    witness << ' ' << h << ':' << degrees_text(row);
  }
  return {"row_degrees", ok, witness.str()};
}

CheckResult verify_row_degrees(std::size_t n, std::size_t cap) {
  return verify_row_degrees(SymbolicInstance::make(n, cap));
}

CheckResult verify_equal_column_vanish(const SymbolicInstance& inst, std::size_t i, std::size_t j) {
  const std::size_t n = inst.n;
  if (!(1 <= i && i < j && j <= n)) {
    throw ShapeError("equal-column check needs 1 <= i < j <= n");
  }
  // u_j is folded into u_i; the arity stays n.
  const Matrix<MultiPoly> merged =
      map_poly(inst.matrix.entries, [&](const MultiPoly& p) { return p.identify(j, i); });
  bool columns_equal = true;
  for (std::size_t h = 0; h < n; ++h) {
    if (!(merged(h, i - 1) == merged(h, j - 1))) columns_equal = false;
  }
  const MultiPoly det_merged = inst.det.identify(j, i);
  const bool vanishes = det_merged.is_zero();
  const std::string name = "equal_columns_vanish(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return {name, columns_equal && vanishes,
          std::string("columns ") + (columns_equal ? "identical" : "differ") + ", det=" + det_merged.str()};
}

CheckResult verify_equal_column_vanish(std::size_t n, std::size_t i, std::size_t j, std::size_t cap) {
  check_size(n, cap, 2);
  return verify_equal_column_vanish(SymbolicInstance::make(n, cap), i, j);
}

IdentityResult verify_full_identity(const SymbolicInstance& inst) {
  const MultiPoly vandermonde = vandermonde_product(inst.n);
  const MultiPoly& det = inst.det;
  std::optional<Rational> constant;
  if (!det.is_zero()) {
    const auto& [lead_det_m, lead_det_c] = det.leading_term();
    const auto& [lead_v_m, lead_v_c] = vandermonde.leading_term();
    if (lead_det_m == lead_v_m) constant = lead_det_c / lead_v_c;
  }
  const bool difference_zero = (det - vandermonde).is_zero();
  const bool structural = det == vandermonde;
  const bool terms_ok = det.size() == factorial(inst.n);
  const bool ok = difference_zero && structural && terms_ok && constant == Rational(1);
  std::ostringstream witness;
  witness << (structural ? "D=P" : "D!=P") << " terms=" << det.size()
          << " N=" << (constant ? constant->str() : std::string("none"));
  return {{"full_identity", ok, witness.str()}, constant};
}

IdentityResult verify_full_identity(std::size_t n, std::size_t cap) {
  return verify_full_identity(SymbolicInstance::make(n, cap));
}

CheckResult verify_mu1_zero_block(const SymbolicInstance& inst) {
  const std::size_t size = inst.n;  // n + 1 in the induction step
  if (size < 2) throw ShapeError("u1 = 0 block check needs size >= 2");
  const Matrix<MultiPoly> at_zero =
      map_poly(inst.matrix.entries, [](const MultiPoly& p) { return p.substitute(1, Rational(0)); });

  const MultiPoly corner = product_of_variables(size, 2, size);
  const bool corner_ok = at_zero(0, 0) == corner;

  bool zeros_ok = true;
  for (std::size_t k = 1; k < size; ++k) zeros_ok = zeros_ok && at_zero(0, k).is_zero();

  std::vector<MultiPoly> tail_nodes;
  for (std::size_t i = 2; i <= size; ++i) tail_nodes.push_back(MultiPoly::variable(size, i));
  const CIMatrix<MultiPoly> smaller = build_ci_matrix(NodeList<MultiPoly>(std::move(tail_nodes)));
  bool block_ok = true;
  for (std::size_t r = 1; r < size; ++r) {
    for (std::size_t c = 1; c < size; ++c) {
      block_ok = block_ok && at_zero(r, c) == smaller.entries(r - 1, c - 1);
    }
  }

  const MultiPoly expected = corner * difference_product(size, 2, size);
  const MultiPoly det_block = det_oracle_symbolic(at_zero, std::max(size, kDefaultSymbolicCap));
  const bool det_ok = det_block == expected && inst.det.substitute(1, Rational(0)) == expected &&
                      corner * det_oracle_symbolic(smaller.entries, std::max(size, kDefaultSymbolicCap)) ==
                          expected;

  std::ostringstream witness;
  witness << "corner=" << (corner_ok ? "ok" : "bad") << " row0=" << (zeros_ok ? "ok" : "bad")
          << " block=" << (block_ok ? "ok" : "bad") << " det=" << (det_ok ? "ok" : "bad");
  return {"mu1_zero_block", corner_ok && zeros_ok && block_ok && det_ok, witness.str()};
}

CheckResult verify_mu1_zero_block(std::size_t n_plus_1, std::size_t cap) {
  check_size(n_plus_1, cap, 2);
  return verify_mu1_zero_block(SymbolicInstance::make(n_plus_1, cap));
}

CheckResult verify_duality(const SymbolicInstance& inst) {
  const std::size_t n = inst.n;
  const NodeList<MultiPoly>& nodes = inst.matrix.nodes;
  std::size_t bad = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      MultiPoly sum(n);
      MultiPoly power(n, Rational(1));
      for (std::size_t h = 1; h <= n; ++h) {
        const MultiPoly term = power * inst.matrix.entry(h, k);
        sum = (n - h) % 2 == 0 ? sum + term : sum - term;
        power *= nodes.at(j);
      }
      MultiPoly expected(n);
      if (j == k) {
        expected = MultiPoly(n, Rational(1));
        for (std::size_t i = 1; i <= n; ++i) {
          if (i != k) expected *= nodes.at(k) - nodes.at(i);
        }
      }
      if (!(sum == expected)) ++bad;
    }
  }
  return {"vandermonde_duality", bad == 0, std::to_string(n * n - bad) + "/" + std::to_string(n * n) + " entries exact"};
}

std::vector<VerificationReport> verify_induction_ladder(std::size_t max_n, std::size_t cap,
                                                        Parallel parallel) {
  check_size(max_n, cap);
  std::vector<VerificationReport> reports(max_n);
  detail::for_each_index(max_n, parallel, [&](std::size_t idx) {
    const SymbolicInstance inst = SymbolicInstance::make(idx + 1, cap);
    VerificationReport& report = reports[idx];
    report.n = inst.n;
    IdentityResult identity = verify_full_identity(inst);
    report.checks.push_back(identity.check);
    report.extracted_n = identity.extracted_n;
    if (inst.n >= 2) report.checks.push_back(verify_mu1_zero_block(inst));
  });
  return reports;
}

std::vector<VerificationReport> verify_all(std::size_t max_n, std::size_t cap, Parallel parallel) {
  check_size(max_n, cap);
  std::vector<VerificationReport> reports(max_n);
  detail::for_each_index(max_n, parallel, [&](std::size_t idx) {
    const SymbolicInstance inst = SymbolicInstance::make(idx + 1, cap);
    VerificationReport& report = reports[idx];
    report.n = inst.n;
    IdentityResult identity = verify_full_identity(inst);
    report.checks.push_back(identity.check);
    report.extracted_n = identity.extracted_n;
    if (inst.n >= 2) report.checks.push_back(verify_mu1_zero_block(inst));
    report.checks.push_back(verify_homogeneity(inst));
    report.checks.push_back(verify_row_degrees(inst));
    for (std::size_t j = 2; j <= inst.n; ++j) {
      for (std::size_t i = 1; i < j; ++i) report.checks.push_back(verify_equal_column_vanish(inst, i, j));
    }
    report.checks.push_back(verify_duality(inst));
  });
  return reports;
}

std::string render_text(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& report : reports) {
    for (const auto& check : report.checks) {
      out += check.passed ? "[PASS]" : "[FAIL]";
      out += " n=" + std::to_string(report.n) + " " + check.name + " " + check.witness + "\n";
    }
  }
  return out;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  return {{"n", report.n},
          {"passed", report.passed()},
          {"checks", checks},
          {"extracted_N", report.extracted_n ? nlohmann::json(report.extracted_n->str()) : nlohmann::json()}};
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return {{"schema", "ci-verify/1"}, {"reports", arr}};
}

}  // namespace cimat
