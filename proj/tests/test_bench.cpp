#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cimat/bench.hpp"
#include "cimat/errors.hpp"

using namespace cimat;

TEST_CASE("well_separated_nodes") {
  for (std::size_t n : {1U, 2U, 10U, 100U, 256U, 1000U}) {
    const auto nodes = well_separated_nodes(n, 7);
    REQUIRE(nodes.size() == n);
    CHECK(std::is_sorted(nodes.begin(), nodes.end()));
    for (std::size_t i = 1; i < n; ++i) CHECK(nodes[i] - nodes[i - 1] >= 0.1 - 1e-12);
    const double half = std::max(10.0, 0.1 * static_cast<double>(n - 1));
    CHECK(nodes.front() >= -half - 1e-9);
    CHECK(nodes.back() <= half + 1e-9);
  }
  CHECK(well_separated_nodes(20, 3) == well_separated_nodes(20, 3));
  CHECK(well_separated_nodes(20, 3) != well_separated_nodes(20, 4));
  // Five nodes at gap 1 do not fit in [-2, 2]; the interval widens to [-4, 4].
  const auto wide = well_separated_nodes(5, 1, 1.0, 2.0);
  CHECK(wide.front() >= -4.0);
  CHECK(wide.back() <= 4.0);
  CHECK_THROWS_AS(well_separated_nodes(0, 1), ShapeError);
}

TEST_CASE("digest") {
  CHECK(result_digest(simd::ScaledDouble::from(2.0)) == result_digest(simd::ScaledDouble::from(2.0000000001)));
  CHECK(result_digest(simd::ScaledDouble::from(2.0)) != result_digest(simd::ScaledDouble::from(2.001)));
  CHECK(result_digest(simd::ScaledDouble::from(2.0)) != result_digest(simd::ScaledDouble::from(-2.0)));
  CHECK(result_digest(simd::ScaledDouble::from(2.0)).size() == 16);
  CHECK(to_scaled(Rational(3, 4)).to_double() == 0.75);
  CHECK(to_scaled(Rational(0)).is_zero());
}

TEST_CASE("run_bench") {
  BenchConfig config;
  config.sizes = {1, 4, 8};
  config.repeats = 3;
  config.with_bareiss = true;
  const auto records = run_bench(config);
  REQUIRE(records.size() == 9);
  CHECK(records[0].n == 1);
  CHECK(records[0].method == "closed_form");
  CHECK(records[0].value.to_double() == 1.0);
  for (std::size_t i = 0; i < records.size(); i += 3) {
    CHECK(records[i].result_digest == records[i + 1].result_digest);
    CHECK(records[i].result_digest == records[i + 2].result_digest);
    CHECK(records[i + 1].method == "lu");
    CHECK(records[i + 2].method == "bareiss");
  }
  for (const auto& r : records) {
    CHECK(r.repeats == 3);
    CHECK(r.seed == 7);
    CHECK(r.wall_time_s >= 0.0);
  }

  const std::string csv = render_bench_csv(records);
  CHECK(csv.rfind(std::string(kBenchCsvHeader) + "\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
  const auto json = bench_to_json(records);
  CHECK(json["schema"] == "ci-bench/1");

  config.repeats = 0;
  CHECK_THROWS_AS(run_bench(config), ShapeError);
  config.repeats = 1;
  config.sizes = {0};
  CHECK_THROWS_AS(run_bench(config), ShapeError);
}
