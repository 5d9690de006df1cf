#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cimat/ci_matrix.hpp"
#include "cimat/multipoly.hpp"
#include "cimat/rational.hpp"

namespace cimat {

inline constexpr std::size_t kDefaultVerifierCap = 6;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct VerificationReport {
  std::size_t n = 0;
  std::vector<CheckResult> checks;
  std::optional<Rational> extracted_n;  // the constant relating det to the Vandermonde product

  bool passed() const;
};

/// Symbolic CI-matrix of size n together with its expanded determinant;
/// the shared input of every check below.
struct SymbolicInstance {
  std::size_t n;
  CIMatrix<MultiPoly> matrix;
  MultiPoly det;

  static SymbolicInstance make(std::size_t n, std::size_t cap = kDefaultVerifierCap);
};

/// det is homogeneous of degree n(n-1)/2.
CheckResult verify_homogeneity(const SymbolicInstance& inst);
CheckResult verify_homogeneity(std::size_t n, std::size_t cap = kDefaultVerifierCap);

/// Every entry of row h is homogeneous of degree n-h.
CheckResult verify_row_degrees(const SymbolicInstance& inst);
CheckResult verify_row_degrees(std::size_t n, std::size_t cap = kDefaultVerifierCap);

/// Identifying u_j with u_i (i < j) makes columns i and j equal and the
/// determinant the zero polynomial.
CheckResult verify_equal_column_vanish(const SymbolicInstance& inst, std::size_t i, std::size_t j);
CheckResult verify_equal_column_vanish(std::size_t n, std::size_t i, std::size_t j,
                                       std::size_t cap = kDefaultVerifierCap);

struct IdentityResult {
  CheckResult check;
  std::optional<Rational> extracted_n;
};

/// det == vandermonde_product(n) as canonical polynomials, with the constant
/// extracted as the ratio of graded-lex leading coefficients.
IdentityResult verify_full_identity(const SymbolicInstance& inst);
IdentityResult verify_full_identity(std::size_t n, std::size_t cap = kDefaultVerifierCap);

/// At u_1 = 0 the size n+1 matrix has first row (u_2...u_{n+1}, 0, ..., 0),
/// trailing block CI(u_2..u_{n+1}), and determinant
/// u_2...u_{n+1} * prod_{2<=i<j<=n+1}(u_j - u_i).
CheckResult verify_mu1_zero_block(const SymbolicInstance& inst);
CheckResult verify_mu1_zero_block(std::size_t n_plus_1, std::size_t cap = kDefaultVerifierCap);

/// Symbolic form of the Vandermonde duality identity: the signed
/// Vandermonde-times-CI product is diag(prod_{i != k}(u_k - u_i)).
CheckResult verify_duality(const SymbolicInstance& inst);

/// Full identity at every n = 1..max_n plus the u_1 = 0 block step for n >= 2.
std::vector<VerificationReport> verify_induction_ladder(std::size_t max_n,
                                                        std::size_t cap = kDefaultVerifierCap,
                                                        Parallel parallel = Parallel::no);

/// The ladder plus homogeneity, row degrees, every equal-column pair and
/// duality, one report per n.
std::vector<VerificationReport> verify_all(std::size_t max_n, std::size_t cap = kDefaultVerifierCap,
                                           Parallel parallel = Parallel::no);

/// One line per check: "[PASS] n=<n> <check-name> <witness>".
std::string render_text(const std::vector<VerificationReport>& reports);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

}  // namespace cimat
