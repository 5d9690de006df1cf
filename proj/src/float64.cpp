#include "cimat/float64.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "cimat/errors.hpp"
#include "cimat/rational.hpp"

namespace cimat {

Float64::Float64(double v) : v_(v) {
  if (!std::isfinite(v)) throw DomainError("non-finite double value");
  if (v == 0.0) v_ = 0.0;  // fold -0.0
}

Float64& Float64::operator/=(Float64 rhs) {
  if (rhs.v_ == 0.0) throw DomainError("float division by zero");
  return *this = Float64(v_ / rhs.v_);
}

Float64 Float64::parse(std::string_view text) {
  // Validate against the shared scalar grammar first.
  const Rational exact = Rational::parse(text);
  if (text.find('/') != std::string_view::npos) {
    return Float64(exact.to_double());
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v,
                                         std::chars_format::fixed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("scalar '" + std::string(text) + "' is out of double range");
  }
  return Float64(v);
}

std::string Float64::str() const { return format_fixed(v_); }

Float64 abs(Float64 x) { return Float64(std::fabs(x.value())); }

std::string format_fixed(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite double value");
  if (v == 0.0) return "0";
  char buf[400];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  if (ec != std::errc()) throw DomainError("cannot format double");
  return std::string(buf, ptr);
}

}  // namespace cimat
