#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cimat/rational.hpp"

namespace cimat {

/// Exponent vector, one slot per variable u1..un.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order, largest first: higher total degree wins,
/// ties broken by the first differing exponent (u1 > u2 > ... > un).
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Rational in a fixed number of variables.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality. Mixing polynomials of different variable counts
/// throws ShapeError.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}
  MultiPoly(std::size_t num_vars, const Rational& constant);

  static MultiPoly variable(std::size_t num_vars, std::size_t index);  // 1-based
  static MultiPoly monomial(const Monomial& exponents, const Rational& coeff);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;

  /// Leading term in graded-lex order. Throws DomainError on the zero polynomial.
  const TermMap::value_type& leading_term() const;

  /// Set of total degrees over all present monomials.
  std::set<unsigned> total_degrees() const;

  /// Replaces u_index (1-based) with `value`. Arity is unchanged.
  MultiPoly substitute(std::size_t index, const Rational& value) const;

  /// Replaces u_from with u_to (1-based); both slots stay in the ambient
  /// arity, u_from simply no longer occurs.
  MultiPoly identify(std::size_t from, std::size_t to) const;

  /// Swaps the roles of u_i and u_j (1-based).
  MultiPoly swap_variables(std::size_t i, std::size_t j) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Terms in graded-lex order with variables rendered as u1..un,
  /// e.g. "u1^2*u2 - 1/2*u3 + 4".
  std::string str() const;
  static MultiPoly parse(std::string_view text, std::size_t num_vars);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

 private:
  void check_arity(const MultiPoly& other) const;
  void add_term(const Monomial& m, const Rational& coeff);

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

MultiPoly scale(const MultiPoly& p, const Rational& factor);
MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Fully expanded prod_{1<=i<j<=n} (u_j - u_i).
MultiPoly vandermonde_product(std::size_t n);

inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.num_vars()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly(p.num_vars(), Rational(1)); }
inline MultiPoly from_int_like(const MultiPoly& p, long v) { return MultiPoly(p.num_vars(), Rational(v)); }

}  // namespace cimat
