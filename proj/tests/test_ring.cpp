#include <doctest.h>

#include <random>

#include "cimat/errors.hpp"
#include "cimat/multipoly.hpp"
#include "cimat/ring.hpp"
#include "oracles.hpp"

using namespace cimat;

TEST_CASE("rational parsing normalizes") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-2/-4") == Rational(1, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("2/-4").str() == "-1/2");
  CHECK(Rational::parse("12345678901234567890123").str() == "12345678901234567890123");
}

TEST_CASE("rational parse errors") {
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1."), ParseError);
  CHECK_THROWS_AS(Rational::parse(".5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("+1"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1e5"), ParseError);
}

TEST_CASE("rational division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational invariants under random arithmetic") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = testing::small_rational(rng) * testing::small_rational(rng) + testing::small_rational(rng);
    const Rational b = testing::small_rational(rng);
    const Rational s = a * b - a;
    CHECK(sgn(s.denominator()) > 0);
    CHECK(gcd(abs(s.numerator()), s.denominator()) == 1);
    CHECK(Rational::parse(s.str()) == s);
    CHECK(Rational::parse(s.str()).str() == s.str());
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("rational to_double rounds to nearest") {
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(-2, 3).to_double() == -2.0 / 3.0);
  CHECK(Rational(1, 10).to_double() == 0.1);
  CHECK(Rational(0).to_double() == 0.0);
}

TEST_CASE("float64 rejects non-finite values") {
  CHECK_THROWS_AS(Float64(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(Float64(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(Float64(1e308) * Float64(10.0), DomainError);
  CHECK_THROWS_AS(Float64(1.0) / Float64(0.0), DomainError);
}

TEST_CASE("float64 text round trip") {
  for (double v : {0.1, -2.5, 6.0, 1e-7, 123456.789, 1.0 / 3.0}) {
    const Float64 x(v);
    CHECK(Float64::parse(x.str()) == x);
  }
  CHECK(Float64(6.0).str() == "6");
  CHECK(Float64(-0.25).str() == "-0.25");
  CHECK(Float64::parse("1/4").value() == 0.25);
}

TEST_CASE("ring axiom suite") {
  SUBCASE("rational") {
    CHECK(ring_axiom_suite<Rational>({Rational(0), Rational(1), Rational(-1, 2)}).passed());
  }
  SUBCASE("float64") {
    CHECK(ring_axiom_suite<Float64>({0.0, 1.0, 0.5}).passed());
  }
  SUBCASE("multipoly") {
    const MultiPoly zero(2);
    const MultiPoly one(2, Rational(1));
    const MultiPoly u1 = MultiPoly::variable(2, 1);
    const AxiomReport report = ring_axiom_suite<MultiPoly>({zero, one, u1});
    CHECK(report.passed());
    CHECK(report.checked == 27);
  }
  SUBCASE("too few samples") {
    CHECK_FALSE(ring_axiom_suite<Rational>({Rational(0), Rational(1)}).passed());
  }
  SUBCASE("random rationals") {
    std::mt19937_64 rng(3);
    std::vector<Rational> samples;
    for (int i = 0; i < 6; ++i) samples.push_back(testing::small_rational(rng));
    CHECK(ring_axiom_suite(samples).passed());
  }
  SUBCASE("inexact floats are caught") {
    // 0.1 + 0.2 + 0.3 is not associative in binary floating point.
    CHECK_FALSE(ring_axiom_suite<Float64>({0.1, 0.2, 0.3}).passed());
  }
}
