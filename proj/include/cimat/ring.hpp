#pragma once

#include <concepts>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "cimat/float64.hpp"
#include "cimat/rational.hpp"

namespace cimat {

// Commutative ring contract shared by every scalar. Identities are obtained
// from an existing element (`zero_like`, `one_like`) so that types carrying
// runtime shape, such as polynomials with a fixed variable count, fit too.
template <class T>
concept RingScalar = std::copyable<T> && std::equality_comparable<T> && requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { zero_like(a) } -> std::convertible_to<T>;
  { one_like(a) } -> std::convertible_to<T>;
  { from_int_like(a, 1L) } -> std::convertible_to<T>;
};

/// Ring with a division that is exact whenever the quotient exists.
template <class T>
concept ExactDivisionRing = RingScalar<T> && requires(const T& a, const T& b) {
  { exact_div(a, b) } -> std::convertible_to<T>;
};

/// Ring with an absolute value and a total order on it (needed for pivoting
/// and for reporting the size of a discrepancy).
template <class T>
concept OrderedRing = RingScalar<T> && requires(const T& a, const T& b) {
  { abs(a) } -> std::convertible_to<T>;
  { a < b } -> std::convertible_to<bool>;
};

template <class T>
struct scalar_traits {
  static constexpr bool exact = true;
};

template <>
struct scalar_traits<Float64> {
  static constexpr bool exact = false;
};

template <class T>
inline constexpr bool is_exact_scalar_v = scalar_traits<T>::exact;

struct AxiomReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks ring axioms on every ordered triple drawn from `samples`.
/// Inexact scalars are compared exactly too, so pick samples whose
/// arithmetic is representable (small dyadic rationals for doubles).
template <RingScalar T>
AxiomReport ring_axiom_suite(const std::vector<T>& samples) {
  AxiomReport report;
  if (samples.size() < 3) {
    report.failures.emplace_back("need at least 3 samples");
    return report;
  }
  auto fail = [&](const char* law, std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << law << " failed on samples (" << i << ", " << j << ", " << k << ")";
    report.failures.push_back(os.str());
  };
  const T zero = zero_like(samples.front());
  const T one = one_like(samples.front());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const T& a = samples[i];
    if (!(a + zero == a) || !(a * one == a)) fail("identity", i, i, i);
    if (!(a + (-a) == zero)) fail("additive inverse", i, i, i);
    if (!(a * zero == zero)) fail("zero annihilates", i, i, i);
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const T& b = samples[j];
      if (!(a + b == b + a)) fail("additive commutativity", i, j, j);
      if (!(a * b == b * a)) fail("multiplicative commutativity", i, j, j);
      for (std::size_t k = 0; k < samples.size(); ++k) {
        const T& c = samples[k];
        ++report.checked;
        if (!((a + b) + c == a + (b + c))) fail("additive associativity", i, j, k);
        if (!((a * b) * c == a * (b * c))) fail("multiplicative associativity", i, j, k);
        if (!(a * (b + c) == a * b + a * c)) fail("distributivity", i, j, k);
      }
    }
  }
  return report;
}

}  // namespace cimat
