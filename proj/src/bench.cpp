#include "cimat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "cimat/ci_matrix.hpp"
#include "cimat/determinant.hpp"
#include "cimat/errors.hpp"

namespace cimat {
namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class F>
double median_seconds(std::size_t repeats, F&& run) {
  std::vector<double> times;
  times.reserve(repeats);
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  return times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

}  // namespace

std::vector<double> well_separated_nodes(std::size_t n, std::uint64_t seed, double min_gap, double bound) {
  if (n == 0) throw ShapeError("well_separated_nodes: n must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  const double reserved = static_cast<double>(n - 1) * min_gap;
  const double half_span = std::max(bound, reserved);
  const double slack = 2.0 * half_span - reserved;
  // Sorted uniform offsets in [0, slack], then spread by i * min_gap.
  std::vector<double> offsets(n);
  for (double& o : offsets) o = uniform01(rng) * slack;
  std::sort(offsets.begin(), offsets.end());
  std::vector<double> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = std::clamp(-half_span + offsets[i] + static_cast<double>(i) * min_gap, -half_span, half_span);
  }
  return nodes;
}

std::string result_digest(const simd::ScaledDouble& value) {
  return fnv1a_hex(simd::format_scientific(value, kDigestDigits));
}

simd::ScaledDouble to_scaled(const Rational& r) {
  if (r.is_zero()) return {0.0, 0};
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, r.raw().get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, r.raw().get_den_mpz_t());
  simd::ScaledDouble out = simd::ScaledDouble::from(num / den);
  out.exponent += num_exp - den_exp;
  return out;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.repeats == 0) throw ShapeError("bench: repeats must be positive");
  std::vector<BenchRecord> records;
  for (const std::size_t n : config.sizes) {
    if (n == 0) throw ShapeError("bench: sizes must be positive");
    const std::vector<double> nodes = well_separated_nodes(n, config.seed);

    auto record = [&](std::string method, double seconds, simd::ScaledDouble value) {
      records.push_back({n, std::move(method), seconds, config.repeats, result_digest(value), config.seed, value});
    };

    simd::ScaledDouble closed;
    det_closed_form_scaled(nodes);  // warm-up
    const double t_closed = median_seconds(config.repeats, [&] { closed = det_closed_form_scaled(nodes); });
    record("closed_form", t_closed, closed);

    std::vector<Float64> float_nodes(nodes.begin(), nodes.end());
    const CIMatrix<Float64> m = build_ci_matrix(NodeList<Float64>(float_nodes));
    std::vector<double> pristine;
    pristine.reserve(n * n);
    for (const Float64& v : m.entries.data()) pristine.push_back(v.value());
    std::vector<double> work = pristine;
    simd::ScaledDouble lu;
    lu_determinant(work, n);  // warm-up
    std::vector<double> times;
    for (std::size_t r = 0; r < config.repeats; ++r) {
      work = pristine;  // copy kept outside the timed region
      times.push_back(median_seconds(1, [&] { lu = lu_determinant(work, n); }));
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    record("lu", times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]), lu);

    if (config.with_bareiss) {
      std::vector<Rational> exact;
      for (double v : nodes) exact.emplace_back(mpq_class(v));
      const CIMatrix<Rational> em = build_ci_matrix(NodeList<Rational>(exact));
      Rational det;
      const double t = median_seconds(config.repeats, [&] { det = det_oracle_exact(em.entries); });
      record("bareiss", t, to_scaled(det));
    }
  }
  return records;
}

std::string render_bench_csv(const std::vector<BenchRecord>& records) {
  std::string out(kBenchCsvHeader);
  out += '\n';
  char buf[64];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.9f", r.wall_time_s);
    out += std::to_string(r.n) + "," + r.method + "," + buf + "," + std::to_string(r.repeats) + "," +
           r.result_digest + "\n";
  }
  return out;
}

nlohmann::json bench_to_json(const std::vector<BenchRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"n", r.n},
                   {"method", r.method},
                   {"wall_time_s", r.wall_time_s},
                   {"repeats", r.repeats},
                   {"result_digest", r.result_digest},
                   {"seed", r.seed},
                   {"value", simd::format_scientific(r.value, 12)}});
  }
  return {{"schema", "ci-bench/1"}, {"records", arr}};
}

}  // namespace cimat
