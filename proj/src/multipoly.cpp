#include "cimat/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "cimat/errors.hpp"

namespace cimat {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::size_t num_vars, const Rational& constant) : num_vars_(num_vars) {
  if (!constant.is_zero()) terms_.emplace(Monomial(num_vars, 0), constant);
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index < 1 || index > num_vars) {
    throw ShapeError("variable index " + std::to_string(index) + " out of range 1.." +
                     std::to_string(num_vars));
  }
  Monomial m(num_vars, 0);
  m[index - 1] = 1;
  return monomial(m, Rational(1));
}

MultiPoly MultiPoly::monomial(const Monomial& exponents, const Rational& coeff) {
  MultiPoly p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return *terms_.begin();
}

std::set<unsigned> MultiPoly::total_degrees() const {
  std::set<unsigned> degrees;
  for (const auto& [m, c] : terms_) degrees.insert(total_degree(m));
  return degrees;
}

void MultiPoly::check_arity(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw ShapeError("polynomial arity mismatch: " + std::to_string(num_vars_) + " vs " +
                     std::to_string(other.num_vars_));
  }
}

void MultiPoly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_arity(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_arity(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly out(a.num_vars_);
  Monomial m(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out(a);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t index, const Rational& value) const {
  if (index < 1 || index > num_vars_) {
    throw ShapeError("substitution index " + std::to_string(index) + " out of range");
  }
  MultiPoly out(num_vars_);
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    const unsigned e = reduced[index - 1];
    reduced[index - 1] = 0;
    out.add_term(reduced, c * cimat::pow(value, e));
  }
  return out;
}

MultiPoly MultiPoly::identify(std::size_t from, std::size_t to) const {
  if (from < 1 || from > num_vars_ || to < 1 || to > num_vars_) {
    throw ShapeError("identification index out of range");
  }
  if (from == to) return *this;
  MultiPoly out(num_vars_);
  for (const auto& [m, c] : terms_) {
    Monomial merged = m;
    merged[to - 1] += merged[from - 1];
    merged[from - 1] = 0;
    out.add_term(merged, c);
  }
  return out;
}

MultiPoly MultiPoly::swap_variables(std::size_t i, std::size_t j) const {
  if (i < 1 || i > num_vars_ || j < 1 || j > num_vars_) {
    throw ShapeError("swap index out of range");
  }
  MultiPoly out(num_vars_);
  for (const auto& [m, c] : terms_) {
    Monomial swapped = m;
    std::swap(swapped[i - 1], swapped[j - 1]);
    out.add_term(swapped, c);
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) {
    throw ShapeError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has " + std::to_string(num_vars_) + " variables");
  }
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term *= cimat::pow(point[i], m[i]);
    }
    sum += term;
  }
  return sum;
}

namespace {

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'u' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

  MultiPoly parse() {
    skip_ws();
    // A single surrounding pair of parentheses is accepted, as in the pretty layout.
    bool parenthesized = false;
    if (peek() == '(') {
      parenthesized = true;
      ++pos_;
    }
    MultiPoly result(num_vars_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      skip_ws();
      auto [m, c] = parse_term();
      result += MultiPoly::monomial(m, sign < 0 ? -c : c);
      first = false;
    }
    if (parenthesized) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip_ws();
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed polynomial '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  std::size_t read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return start;
  }

  std::pair<Monomial, Rational> parse_term() {
    Monomial m(num_vars_, 0);
    Rational coeff(1);
    while (true) {
      skip_ws();
      if (peek() == 'u') {
        ++pos_;
        const std::size_t start = read_digits();
        const std::size_t index = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (index < 1 || index > num_vars_) fail("variable index out of range");
        unsigned exponent = 1;
        if (peek() == '^') {
          ++pos_;
          const std::size_t es = read_digits();
          exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(es, pos_ - es))));
        }
        m[index - 1] += exponent;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = read_digits();
        if (peek() == '.' || peek() == '/') {
          ++pos_;
          read_digits();
        }
        coeff *= Rational::parse(text_.substr(start, pos_ - start));
      } else {
        fail("expected a coefficient or a variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, coeff};
  }

  std::string_view text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    const std::string vars = render_monomial(m);
    if (vars.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += vars;
    } else {
      out += mag.str() + '*' + vars;
    }
    first = false;
  }
  return out;
}

MultiPoly MultiPoly::parse(std::string_view text, std::size_t num_vars) {
  return PolyParser(text, num_vars).parse();
}

MultiPoly scale(const MultiPoly& p, const Rational& factor) {
  return p * MultiPoly(p.num_vars(), factor);
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(base.num_vars(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

MultiPoly vandermonde_product(std::size_t n) {
  if (n < 1) throw ShapeError("vandermonde_product needs n >= 1");
  MultiPoly product(n, Rational(1));
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      product *= MultiPoly::variable(n, j) - MultiPoly::variable(n, i);
    }
  }
  return product;
}

}  // namespace cimat
