#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace cimat::simd {

/// mantissa * 2^exponent with |mantissa| in [0.5, 1) or exactly zero.
/// Carries products of tens of thousands of factors without overflow.
struct ScaledDouble {
  double mantissa = 0.5;
  std::int64_t exponent = 1;  // default value is 1.0

  static ScaledDouble from(double v) {
    int e = 0;
    const double m = std::frexp(v, &e);
    return {m, e};
  }

  bool is_zero() const { return mantissa == 0.0; }
  int sign() const { return mantissa > 0 ? 1 : (mantissa < 0 ? -1 : 0); }

  ScaledDouble& operator*=(double factor) {
    int e = 0;
    mantissa = std::frexp(mantissa * factor, &e);
    exponent = mantissa == 0.0 ? 0 : exponent + e;
    return *this;
  }

  ScaledDouble& operator*=(const ScaledDouble& other) {
    *this *= other.mantissa;
    if (mantissa != 0.0) exponent += other.exponent;
    return *this;
  }

  ScaledDouble operator-() const { return {-mantissa, exponent}; }

  /// Plain double; may be ±inf or 0 when out of range.
  double to_double() const {
    if (mantissa == 0.0) return 0.0;
    if (exponent > 2000) return std::copysign(HUGE_VAL, mantissa);
    if (exponent < -2000) return std::copysign(0.0, mantissa);
    return std::ldexp(mantissa, static_cast<int>(exponent));
  }

  /// log10 |value|; -inf for zero.
  double log10_abs() const {
    if (mantissa == 0.0) return -HUGE_VAL;
    return std::log10(std::fabs(mantissa)) + static_cast<double>(exponent) * 0.30102999566398119521;
  }
};

/// Relative difference |a - b| / max(|a|, |b|), computed without overflow.
double relative_difference(const ScaledDouble& a, const ScaledDouble& b);

/// Sign and `digits` significant decimal digits in scientific form with an
/// unbounded exponent, e.g. "+2.00000e+0". Zero renders as "0".
std::string format_scientific(const ScaledDouble& v, int digits);

}  // namespace cimat::simd
