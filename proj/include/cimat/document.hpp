#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cimat/ci_matrix.hpp"
#include "cimat/float64.hpp"
#include "cimat/multipoly.hpp"
#include "cimat/rational.hpp"

namespace cimat {

inline constexpr std::string_view kMatrixSchema = "ci-matrix/1";

enum class ScalarKind { rational, float64, symbolic };

std::string_view scalar_kind_name(ScalarKind kind);
ScalarKind parse_scalar_kind(std::string_view name);

/// Serializable CI-matrix: every scalar is a string in the scalar grammar,
/// polynomials use the u1..un rendering. `mu` is empty for symbolic nodes.
struct MatrixDocument {
  std::size_t n = 0;
  std::optional<std::vector<std::string>> mu;
  ScalarKind kind = ScalarKind::rational;
  std::vector<std::vector<std::string>> entries;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

MatrixDocument to_document(const CIMatrix<Rational>& m);
MatrixDocument to_document(const CIMatrix<Float64>& m);
MatrixDocument to_document(const CIMatrix<MultiPoly>& m);

std::string render_json(const MatrixDocument& doc);
std::string render_csv(const MatrixDocument& doc);

/// Aligned bracketed layout; polynomial entries with several terms are
/// parenthesized.
std::string render_pretty(const MatrixDocument& doc);

/// Parses and validates a JSON document (schema tag, shape, scalar grammar,
/// bottom row of ones). Scalars come back in canonical form.
MatrixDocument parse_json(std::string_view text);

/// Parses CSV rows of the given kind back into canonical entry strings.
std::vector<std::vector<std::string>> parse_csv(std::string_view text, ScalarKind kind);

/// Canonical text of one scalar of the given kind; throws ParseError.
std::string canonical_scalar(std::string_view text, ScalarKind kind, std::size_t num_vars);

Matrix<Rational> rational_entries(const MatrixDocument& doc);
Matrix<Float64> float_entries(const MatrixDocument& doc);
Matrix<MultiPoly> symbolic_entries(const MatrixDocument& doc);

}  // namespace cimat
