#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cimat/rational.hpp"
#include "cimat/simd/scaled_double.hpp"

namespace cimat {

/// Sorted nodes with consecutive gaps >= min_gap, drawn from a seeded
/// std::mt19937_64 (seed_seq {seed low, seed high, n}). Nodes lie in
/// [-bound, bound] unless n nodes at that spacing cannot fit, in which case
/// the interval widens to +-(n-1)*min_gap. Uniform doubles are formed from
/// the top 53 bits of each draw, so streams are identical on every platform.
std::vector<double> well_separated_nodes(std::size_t n, std::uint64_t seed, double min_gap = 0.1,
                                         double bound = 10.0);

/// Significant digits kept when rounding a determinant for its digest.
inline constexpr int kDigestDigits = 6;

/// Hex FNV-1a hash of the value rounded to kDigestDigits significant digits.
std::string result_digest(const simd::ScaledDouble& value);

/// Scaled-double image of an exact rational (for digesting exact results).
simd::ScaledDouble to_scaled(const Rational& r);

struct BenchRecord {
  std::size_t n = 0;
  std::string method;  // closed_form | lu | bareiss
  double wall_time_s = 0.0;  // median over repeats
  std::size_t repeats = 0;
  std::string result_digest;
  std::uint64_t seed = 0;
  simd::ScaledDouble value;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t repeats = 5;
  std::uint64_t seed = 7;
  bool with_bareiss = false;
};

/// Times the closed form against LU (and optionally exact Bareiss) on the
/// same seeded nodes for every size. Throws ShapeError for nonpositive
/// sizes or repeats.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader = "n,method,wall_time_s,repeats,result_digest";

std::string render_bench_csv(const std::vector<BenchRecord>& records);
nlohmann::json bench_to_json(const std::vector<BenchRecord>& records);

}  // namespace cimat
