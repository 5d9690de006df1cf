#include <doctest.h>

#include <cmath>
#include <random>

#include "cimat/errors.hpp"
#include "cimat/symfunc.hpp"
#include "oracles.hpp"

using namespace cimat;

namespace {

NodeList<Rational> rationals(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return NodeList<Rational>(v);
}

std::vector<Rational> ints(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("elem_sym_all") {
  // (t+1)(t+2)(t+3) = t^3 + 6t^2 + 11t + 6
  CHECK(elem_sym_all(rationals({1, 2, 3})).e == ints({1, 6, 11, 6}));
  CHECK(elem_sym_all(rationals({0, 0})).e == ints({1, 0, 0}));
  CHECK(elem_sym_all(NodeList<Rational>({Rational(7, 3)})).e == std::vector<Rational>{Rational(1), Rational(7, 3)});
  CHECK_THROWS_AS(NodeList<Rational>(std::vector<Rational>{}), ShapeError);
}

TEST_CASE("elem_sym_all against subset enumeration") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto values = testing::distinct_rationals(n, rng);
    CHECK(elem_sym_all(NodeList<Rational>(values)).e == testing::brute_elem_sym(values, Rational(0), Rational(1)));
  }
}

TEST_CASE("generating function identity") {
  std::mt19937_64 rng(22);
  for (std::size_t n = 1; n <= 8; ++n) {
    const NodeList<Rational> nodes(testing::distinct_rationals(n, rng));
    const ElemSymTable<Rational> table = elem_sym_all(nodes);
    for (long t : {1L, 2L, -1L}) {
      Rational lhs(1);
      for (const Rational& x : nodes.values()) lhs *= Rational(t) + x;
      Rational rhs;
      for (std::size_t m = 0; m <= n; ++m) rhs += table[m] * pow(Rational(t), static_cast<unsigned>(n - m));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("scaling homogeneity of the table") {
  const NodeList<Rational> nodes(std::vector<Rational>{Rational(1, 2), Rational(-3), Rational(5, 7), Rational(2)});
  const Rational t(-2, 3);
  std::vector<Rational> scaled;
  for (const auto& x : nodes.values()) scaled.push_back(t * x);
  const auto base = elem_sym_all(nodes);
  const auto big = elem_sym_all(NodeList<Rational>(scaled));
  for (std::size_t m = 0; m <= 4; ++m) CHECK(big[m] == base[m] * pow(t, static_cast<unsigned>(m)));
}

TEST_CASE("elem_sym_leave_one_out") {
  const auto nodes = rationals({1, 2, 3});
  CHECK(elem_sym_leave_one_out(nodes, 1, LeaveOneOutMode::stable) == ints({1, 5, 6}));
  CHECK(elem_sym_leave_one_out(nodes, 1, LeaveOneOutMode::deflate) == ints({1, 5, 6}));
  CHECK(elem_sym_leave_one_out(rationals({4, 4}), 2) == ints({1, 4}));
  CHECK(elem_sym_leave_one_out(rationals({9}), 1) == ints({1}));
  CHECK_THROWS_AS(elem_sym_leave_one_out(nodes, 0), ShapeError);
  CHECK_THROWS_AS(elem_sym_leave_one_out(nodes, 4), ShapeError);

  SUBCASE("symbolic n=4, column 1 top entry is u2*u3*u4") {
    const auto sym = symbolic_nodes(4);
    const auto col = elem_sym_leave_one_out(sym, 1);
    CHECK(col[3] == MultiPoly::parse("u2*u3*u4", 4));
    CHECK(col[2] == MultiPoly::parse("u2*u3 + u3*u4 + u2*u4", 4));
    CHECK(col[1] == MultiPoly::parse("u2 + u3 + u4", 4));
    CHECK(col[0] == MultiPoly(4, Rational(1)));
  }
}

TEST_CASE("leave-one-out modes agree exactly") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 10; ++n) {
    const NodeList<Rational> nodes(testing::distinct_rationals(n, rng));
    for (std::size_t k = 1; k <= n; ++k) {
      const auto stable = elem_sym_leave_one_out(nodes, k, LeaveOneOutMode::stable);
      CHECK(stable == elem_sym_leave_one_out(nodes, k, LeaveOneOutMode::deflate));
      CHECK(stable == testing::brute_elem_sym(nodes.without(k), Rational(0), Rational(1)));
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto sym = symbolic_nodes(n);
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(elem_sym_leave_one_out(sym, k, LeaveOneOutMode::stable) ==
            elem_sym_leave_one_out(sym, k, LeaveOneOutMode::deflate));
    }
  }
}

TEST_CASE("symmetry under node permutation") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const NodeList<Rational> nodes(testing::distinct_rationals(n, rng));
    const auto sigma = testing::random_permutation(n, rng);
    const NodeList<Rational> permuted = nodes.permuted(sigma);
    CHECK(elem_sym_all(permuted).e == elem_sym_all(nodes).e);
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(elem_sym_leave_one_out(permuted, k) == elem_sym_leave_one_out(nodes, sigma[k - 1]));
    }
  }
}

TEST_CASE("deflation_consistency_check") {
  const auto nodes = rationals({1, 2, 3});
  for (std::size_t k = 1; k <= 3; ++k) CHECK(deflation_consistency_check(nodes, k) == Rational(0));

  const auto sym = symbolic_nodes(4);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(deflation_consistency_check(sym, k).is_zero());

  const NodeList<Float64> floats(std::vector<Float64>{1.0, 2.0, 3.0});
  CHECK(deflation_consistency_check(floats, 2).value() <= 1e-12);
}

TEST_CASE("default modes") {
  CHECK(default_mode<Rational>() == LeaveOneOutMode::deflate);
  CHECK(default_mode<MultiPoly>() == LeaveOneOutMode::deflate);
  CHECK(default_mode<Float64>() == LeaveOneOutMode::stable);
}

TEST_CASE("float table matches exact table") {
  std::mt19937_64 rng(25);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto exact = testing::distinct_rationals(n, rng);
    std::vector<Float64> approx;
    std::vector<Rational> magnitudes;
    for (const auto& r : exact) {
      approx.emplace_back(r.to_double());
      magnitudes.push_back(abs(r));
    }
    const auto e_exact = elem_sym_all(NodeList<Rational>(exact));
    const auto e_float = elem_sym_all(NodeList<Float64>(approx));
    // Error scale: the same sums taken over |x|.
    const auto e_scale = elem_sym_all(NodeList<Rational>(magnitudes));
    for (std::size_t m = 0; m <= n; ++m) {
      const double want = e_exact[m].to_double();
      CHECK(std::fabs(e_float[m].value() - want) <= 1e-14 * n * e_scale[m].to_double());
    }
  }
}
