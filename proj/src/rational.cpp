#include "cimat/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

#include "cimat/errors.hpp"

namespace cimat {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// [-]?[0-9]+
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  mpz_class v(std::string(digits), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (sgn(den) == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (!all_digits(frac_part)) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    const bool negative = !int_part.empty() && int_part.front() == '-';
    const mpz_class whole = parse_integer(int_part, text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    const mpz_class frac(std::string(frac_part), 10);
    const mpz_class magnitude = abs(whole) * scale + frac;
    return Rational(negative ? mpz_class(-magnitude) : magnitude, scale);
  }
  return Rational(parse_integer(text, text), mpz_class(1));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::to_double() const {
  // mpq_get_d truncates. Render 40 significant digits and let strtod round.
  if (is_zero()) return 0.0;
  mpf_class f(value_, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, 40);
  std::string text;
  if (!digits.empty() && digits.front() == '-') {
    text = "-";
    digits.erase(0, 1);
  }
  text += "0." + digits + "e" + std::to_string(exp);
  return std::strtod(text.c_str(), nullptr);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.raw()))); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace cimat
