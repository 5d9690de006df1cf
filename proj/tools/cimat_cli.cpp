// cimat: build CI-matrices, evaluate their determinant, verify the product
// formula symbolically, and benchmark the float paths.
//
// Exit codes: 0 success, 2 usage or parse error, 3 oracle mismatch or failed
// verification.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cimat/bench.hpp"
#include "cimat/ci_matrix.hpp"
#include "cimat/document.hpp"
#include "cimat/errors.hpp"
#include "cimat/verifier.hpp"

namespace {

using namespace cimat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

constexpr std::size_t kSymbolicGenCap = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(',', start);
    parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T>
NodeList<T> parse_nodes(const std::string& list) {
  std::vector<T> values;
  for (const std::string& item : split_list(list)) values.push_back(T::parse(item));
  return NodeList<T>(std::move(values));
}

LeaveOneOutMode parse_mode(const std::string& mode) {
  return mode == "stable" ? LeaveOneOutMode::stable : LeaveOneOutMode::deflate;
}

std::string render(const MatrixDocument& doc, const std::string& out) {
  if (out == "json") return render_json(doc);
  if (out == "csv") return render_csv(doc);
  return render_pretty(doc);
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::optional<long long> n;
  std::string mu;
  bool symbolic = false;
  std::string mode;
  std::string out = "pretty";
  std::string scalar = "rational";
  bool parallel = false;
};

int run_gen(const GenOptions& opt) {
  const Parallel par = opt.parallel ? Parallel::yes : Parallel::no;
  MatrixDocument doc;
  if (opt.symbolic) {
    if (!opt.n) throw UsageError("--symbolic needs --n");
    if (!opt.mu.empty()) throw UsageError("--symbolic and --mu are exclusive");
    if (*opt.n < 1) throw UsageError("--n must be at least 1");
    if (static_cast<std::size_t>(*opt.n) > kSymbolicGenCap) {
      throw UsageError("symbolic generation is capped at n = " + std::to_string(kSymbolicGenCap));
    }
    const auto nodes = symbolic_nodes(static_cast<std::size_t>(*opt.n));
    const auto mode = opt.mode.empty() ? default_mode<MultiPoly>() : parse_mode(opt.mode);
    doc = to_document(build_ci_matrix(nodes, mode, par));
  } else {
    if (opt.mu.empty()) throw UsageError("gen needs --mu or --symbolic");
    if (opt.scalar == "float64") {
      const auto nodes = parse_nodes<Float64>(opt.mu);
      const auto mode = opt.mode.empty() ? default_mode<Float64>() : parse_mode(opt.mode);
      doc = to_document(build_ci_matrix(nodes, mode, par));
    } else {
      const auto nodes = parse_nodes<Rational>(opt.mu);
      const auto mode = opt.mode.empty() ? default_mode<Rational>() : parse_mode(opt.mode);
      doc = to_document(build_ci_matrix(nodes, mode, par));
    }
    if (opt.n && static_cast<std::size_t>(*opt.n) != doc.n) {
      throw UsageError("--n does not match the number of --mu values");
    }
  }
  std::cout << render(doc, opt.out);
  return kExitOk;
}

// ---------------------------------------------------------------- det

struct DetOptions {
  std::string mu;
  std::string oracle = "none";
  double tol = 1e-8;
  std::string scalar = "rational";
};

std::string scaled_text(const simd::ScaledDouble& v) {
  const double d = v.to_double();
  if (std::isfinite(d) && (d == 0.0 || std::fabs(d) >= 1e-300)) return format_fixed(d);
  return simd::format_scientific(v, 17);
}

int run_det(const DetOptions& opt) {
  if (opt.scalar == "float64") {
    const auto nodes = parse_nodes<Float64>(opt.mu);
    std::vector<double> raw;
    for (const Float64& v : nodes.values()) raw.push_back(v.value());
    const simd::ScaledDouble closed = det_closed_form_scaled(raw);
    std::cout << "closed_form=" << scaled_text(closed) << "\n";
    if (opt.oracle == "none") return kExitOk;
    simd::ScaledDouble oracle;
    if (opt.oracle == "lu") {
      oracle = det_oracle_float_scaled(build_ci_matrix(nodes).entries);
    } else {
      std::vector<Rational> exact;
      for (double v : raw) exact.emplace_back(mpq_class(v));
      oracle = to_scaled(det_oracle_exact(build_ci_matrix(NodeList<Rational>(exact)).entries));
    }
    const double rel = simd::relative_difference(closed, oracle);
    const bool ok = rel <= opt.tol;
    std::cout << "oracle=" << opt.oracle << " value=" << scaled_text(oracle) << "\n"
              << "relative_discrepancy=" << rel << " tol=" << opt.tol << (ok ? " agree" : " MISMATCH") << "\n";
    return ok ? kExitOk : kExitMismatch;
  }

  const auto nodes = parse_nodes<Rational>(opt.mu);
  const Rational closed = det_closed_form(nodes);
  std::cout << "closed_form=" << closed << "\n";
  if (opt.oracle == "none") return kExitOk;
  if (opt.oracle == "bareiss") {
    const DetReport<Rational> report = det_report(nodes, OracleKind::bareiss);
    std::cout << "oracle=bareiss value=" << report.oracle << "\n"
              << "discrepancy=" << report.discrepancy << (report.exact_match ? " exact match" : " MISMATCH") << "\n";
    return report.exact_match ? kExitOk : kExitMismatch;
  }
  // LU on the float image of the exact matrix.
  const CIMatrix<Rational> m = build_ci_matrix(nodes);
  const Matrix<Float64> fm = map_entries(m.entries, [](const Rational& r) { return Float64(r.to_double()); });
  const simd::ScaledDouble oracle = det_oracle_float_scaled(fm);
  const double rel = simd::relative_difference(to_scaled(closed), oracle);
  const bool ok = rel <= opt.tol;
  std::cout << "oracle=lu value=" << scaled_text(oracle) << "\n"
            << "relative_discrepancy=" << rel << " tol=" << opt.tol << (ok ? " agree" : " MISMATCH") << "\n";
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  long long max_n = kDefaultVerifierCap;
  long long cap = kDefaultVerifierCap;
  bool json = false;
  bool parallel = false;
};

int run_verify(const VerifyOptions& opt) {
  if (opt.cap < 1) throw UsageError("--cap must be at least 1");
  if (opt.max_n < 1 || opt.max_n > opt.cap) {
    throw UsageError("--max-n must lie in 1.." + std::to_string(opt.cap));
  }
  const auto reports = verify_all(static_cast<std::size_t>(opt.max_n), static_cast<std::size_t>(opt.cap),
                                  opt.parallel ? Parallel::yes : Parallel::no);
  if (opt.json) {
    std::cout << to_json(reports).dump(2) << "\n";
  } else {
    std::cout << render_text(reports);
  }
  for (const auto& r : reports) {
    if (!r.passed()) return kExitMismatch;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string n_list;
  long long repeats = 5;
  unsigned long long seed = 7;
  std::string out = "csv";
  bool with_bareiss = false;
};

int run_bench_cmd(const BenchOptions& opt) {
  BenchConfig config;
  for (const std::string& item : split_list(opt.n_list)) {
    long long n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed size '" + item + "' in --n-list");
    }
    if (n < 1) throw UsageError("--n-list sizes must be positive");
    config.sizes.push_back(static_cast<std::size_t>(n));
  }
  if (opt.repeats < 1) throw UsageError("--repeats must be positive");
  config.repeats = static_cast<std::size_t>(opt.repeats);
  config.seed = opt.seed;
  config.with_bareiss = opt.with_bareiss;

  const auto records = run_bench(config);
  std::cerr << "bench: seed=" << config.seed << " generator=mt19937_64 kernels="
            << simd::isa_name(simd::active_kernels().isa) << "\n";
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const auto& a = records[i];
    const auto& b = records[i + 1];
    if (a.n == b.n && a.method == "closed_form" && a.result_digest != b.result_digest) {
      std::cerr << "bench: n=" << a.n << " closed_form and lu digests differ (relative difference "
                << simd::relative_difference(a.value, b.value)
                << "); the float CI-matrix is too ill-conditioned at this size\n";
    }
  }
  if (opt.out == "json") {
    std::cout << bench_to_json(records).dump(2) << "\n";
  } else {
    std::cout << render_bench_csv(records);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CI-matrix construction, determinants and verification"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit the CI-matrix for the given nodes");
  gen_cmd->add_option("--n", gen.n, "Matrix size (required with --symbolic)");
  gen_cmd->add_option("--mu", gen.mu, "Comma-separated nodes u1,...,un in order");
  gen_cmd->add_flag("--symbolic", gen.symbolic, "Use indeterminates u1..un");
  gen_cmd->add_option("--mode", gen.mode, "Leave-one-out mode")->check(CLI::IsMember({"stable", "deflate"}));
  gen_cmd->add_option("--out", gen.out, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  gen_cmd->add_option("--scalar", gen.scalar, "Scalar kind for --mu")->check(CLI::IsMember({"rational", "float64"}));
  gen_cmd->add_flag("--parallel", gen.parallel, "Build columns in parallel");

  DetOptions det;
  auto* det_cmd = app.add_subcommand("det", "Closed-form determinant, optionally checked by an oracle");
  det_cmd->add_option("--mu", det.mu, "Comma-separated nodes")->required();
  det_cmd->add_option("--oracle", det.oracle, "Independent oracle")->check(CLI::IsMember({"none", "bareiss", "lu"}));
  det_cmd->add_option("--tol", det.tol, "Relative tolerance for float comparisons")->check(CLI::NonNegativeNumber);
  det_cmd->add_option("--scalar", det.scalar, "Scalar kind")->check(CLI::IsMember({"rational", "float64"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Symbolically verify the determinant formula and its proof steps");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest size to verify");
  verify_cmd->add_option("--cap", verify.cap, "Symbolic size cap");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
  verify_cmd->add_flag("--parallel", verify.parallel, "Run sizes in parallel");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time closed form against LU on seeded float nodes");
  bench_cmd->add_option("--n-list", bench.n_list, "Comma-separated sizes")->required();
  bench_cmd->add_option("--repeats", bench.repeats, "Timed repeats per method (median reported)");
  bench_cmd->add_option("--seed", bench.seed, "Seed for the node generator");
  bench_cmd->add_option("--out", bench.out, "Output format")->check(CLI::IsMember({"csv", "json"}));
  bench_cmd->add_flag("--with-bareiss", bench.with_bareiss, "Also time exact Bareiss (slow)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*det_cmd) return run_det(det);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench_cmd(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
