#include "cimat/simd/scaled_double.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace cimat::simd {

double relative_difference(const ScaledDouble& a, const ScaledDouble& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  if (a.is_zero() || b.is_zero()) return 1.0;
  const bool a_larger = a.exponent > b.exponent ||
                        (a.exponent == b.exponent && std::fabs(a.mantissa) >= std::fabs(b.mantissa));
  const ScaledDouble& big = a_larger ? a : b;
  const ScaledDouble& small = a_larger ? b : a;
  const std::int64_t shift = small.exponent - big.exponent;  // <= 0
  if (shift < -1100) return 1.0;
  const double ratio = std::ldexp(small.mantissa / big.mantissa, static_cast<int>(shift));
  return std::fabs(1.0 - ratio);
}

std::string format_scientific(const ScaledDouble& v, int digits) {
  if (v.is_zero()) return "0";
  digits = std::clamp(digits, 1, 17);
  const char sign = v.mantissa < 0 ? '-' : '+';
  double mant = 0.0;
  long long exp10 = 0;
  if (v.exponent > -1000 && v.exponent < 1000) {
    // In double range: let printf do the correctly rounded work.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, std::fabs(v.to_double()));
    std::string s(buf);
    const auto epos = s.find('e');
    return sign + s.substr(0, epos) + "e" + std::to_string(std::atoll(s.c_str() + epos + 1));
  }
  const double l = v.log10_abs();
  exp10 = static_cast<long long>(std::floor(l));
  mant = std::pow(10.0, l - static_cast<double>(exp10));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mant);
  if (buf[0] == '1' && buf[1] == '0') {  // rounded up to 10.000...
    ++exp10;
    std::snprintf(buf, sizeof buf, "%.*f", digits - 1, 1.0);
  }
  return sign + std::string(buf) + "e" + std::to_string(exp10);
}

}  // namespace cimat::simd
