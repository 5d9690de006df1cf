#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace cimat {

/// A finite IEEE double. Construction from NaN or an infinity throws, and so
/// does any operation whose result is not finite.
class Float64 {
 public:
  Float64() = default;
  Float64(double v);  // NOLINT(google-explicit-constructor)

  static Float64 zero() { return Float64(); }
  static Float64 one() { return Float64(1.0); }

  /// Accepts the same grammar as Rational::parse; fractions are divided in
  /// double precision.
  static Float64 parse(std::string_view text);

  /// Shortest fixed-notation text that parses back to the same double.
  std::string str() const;

  double value() const { return v_; }
  bool is_zero() const { return v_ == 0.0; }

  Float64& operator+=(Float64 rhs) { return *this = Float64(v_ + rhs.v_); }
  Float64& operator-=(Float64 rhs) { return *this = Float64(v_ - rhs.v_); }
  Float64& operator*=(Float64 rhs) { return *this = Float64(v_ * rhs.v_); }
  Float64& operator/=(Float64 rhs);

  friend Float64 operator+(Float64 a, Float64 b) { return a += b; }
  friend Float64 operator-(Float64 a, Float64 b) { return a -= b; }
  friend Float64 operator*(Float64 a, Float64 b) { return a *= b; }
  friend Float64 operator/(Float64 a, Float64 b) { return a /= b; }
  friend Float64 operator-(Float64 a) { return Float64(-a.v_); }

  friend bool operator==(Float64 a, Float64 b) { return a.v_ == b.v_; }
  friend std::partial_ordering operator<=>(Float64 a, Float64 b) { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Float64 x) { return os << x.str(); }

 private:
  double v_ = 0.0;
};

Float64 abs(Float64 x);

inline Float64 zero_like(Float64) { return Float64(); }
inline Float64 one_like(Float64) { return Float64(1.0); }
inline Float64 from_int_like(Float64, long v) { return Float64(static_cast<double>(v)); }

/// Renders a finite double in the `[-]?[0-9]+(.[0-9]+)?` grammar.
std::string format_fixed(double v);

}  // namespace cimat
