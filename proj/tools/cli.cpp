#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "maxdist/bench.hpp"
#include "maxdist/datagen.hpp"
#include "maxdist/error.hpp"
#include "maxdist/point_io.hpp"
#include "maxdist/verify.hpp"

namespace maxdist::cli {
namespace {

template <typename T, typename Parse>
T parse_or_throw(const std::string& text, Parse parse, const char* what) {
  if (auto v = parse(text)) return *v;
  throw Error(ErrorCode::BadParameter, std::string("unknown ") + what + " '" + text + "'");
}

// Accepts plain integers and integral scientific forms such as 1e5.
std::size_t parse_size(const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value >= 1.0) || value != std::floor(value) ||
      value > 1e12) {
    throw Error(ErrorCode::BadParameter, "bad size '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

PointFormat resolve_format(const std::string& flag, const std::string& path) {
  if (flag.empty()) return format_from_path(path);
  return parse_or_throw<PointFormat>(flag, parse_point_format, "format");
}

}  // namespace

nlohmann::json report_to_json(const DiameterReport& report) {
  const PhaseCounters& c = report.counters;
  return nlohmann::json{
      {"dist", report.dist},
      {"sq_dist", report.sq_dist.value()},
      {"witness_i", report.witness.i},
      {"witness_j", report.witness.j},
      {"pair_evals", c.pair_evals},
      {"corner_evals", c.corner_evals},
      {"eliminated_preprocess", c.eliminated_preprocess},
      {"eliminated_runtime", c.eliminated_runtime},
      {"survivors", c.survivors},
      {"adjacent_scans_run", c.adjacent_scans_run},
  };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum distance (diameter) of 2D point sets"};
  app.require_subcommand(1);

  std::string kind_text = "uniform", out_path, format_text, in_path, algo_text = "fast", suite_text = "default";
  std::size_t n = 0;
  std::uint64_t seed = 1;
  double aspect = 1.0, jitter = 0.0;
  bool as_json = false;

  auto* generate_cmd = app.add_subcommand("generate", "Write a generated point set to a file");
  generate_cmd->add_option("--kind", kind_text, "uniform|circle|gaussian|clustered")->required();
  generate_cmd->add_option("--n", n, "Point count")->required();
  generate_cmd->add_option("--seed", seed, "PRNG seed")->required();
  generate_cmd->add_option("--aspect", aspect, "Width/height ratio (uniform)");
  generate_cmd->add_option("--jitter", jitter, "Relative radial jitter (circle)");
  generate_cmd->add_option("--out", out_path, "Output path")->required();
  generate_cmd->add_option("--format", format_text, "csv|bin (default: from extension)");

  auto* run_cmd = app.add_subcommand("run", "Compute the diameter of a point file");
  run_cmd->add_option("--algo", algo_text, "brute|hull|fast")->required();
  run_cmd->add_option("--in", in_path, "Input path")->required();
  run_cmd->add_option("--format", format_text, "csv|bin (default: from extension)");
  run_cmd->add_flag("--json", as_json, "Print a single-line JSON report");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check brute, hull and fast on a built-in suite");
  verify_cmd->add_option("--suite", suite_text, "default|quick");

  std::vector<std::string> algos_list, kinds_list, sizes_list;
  std::size_t reps = 1;
  std::size_t brute_cap = BenchConfig{}.brute_cap;
  auto* bench_cmd = app.add_subcommand("bench", "Time algorithms over generated inputs");
  bench_cmd->add_option("--algos", algos_list, "Comma-separated algorithms")->delimiter(',')->required();
  bench_cmd->add_option("--kinds", kinds_list, "Comma-separated kinds")->delimiter(',')->required();
  bench_cmd->add_option("--sizes", sizes_list, "Comma-separated sizes")->delimiter(',')->required();
  bench_cmd->add_option("--reps", reps, "Repetitions per case")->required();
  bench_cmd->add_option("--out", out_path, "Raw results csv")->required();
  bench_cmd->add_option("--seed", seed, "PRNG seed");
  bench_cmd->add_option("--aspect", aspect, "Width/height ratio (uniform)");
  bench_cmd->add_option("--brute-cap", brute_cap, "Largest n timed for brute force; larger n are extrapolated");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate_cmd) {
      const SourceKind kind = parse_or_throw<SourceKind>(kind_text, parse_source_kind, "kind");
      if (kind == SourceKind::File) throw Error(ErrorCode::BadParameter, "cannot generate kind 'file'");
      const PointSet points = generate({kind, n, seed, aspect, jitter, {}});
      write_points(points, out_path, resolve_format(format_text, out_path));
      out << "wrote " << points.size() << " points to " << out_path << '\n';
      return kExitOk;
    }
    if (*run_cmd) {
      const Algo algo = parse_or_throw<Algo>(algo_text, parse_algo, "algorithm");
      const PointSet points = read_points(in_path, resolve_format(format_text, in_path));
      const DiameterReport report = run_algo(algo, points);
      if (as_json) {
        out << report_to_json(report).dump() << '\n';
      } else {
        const PhaseCounters& c = report.counters;
        out << "dist " << nlohmann::json(report.dist).dump() << "\nsq_dist " << nlohmann::json(report.sq_dist.value()).dump()
            << "\nwitness " << report.witness.i << ' ' << report.witness.j << "\npair_evals " << c.pair_evals
            << "\ncorner_evals " << c.corner_evals << "\neliminated_preprocess " << c.eliminated_preprocess
            << "\neliminated_runtime " << c.eliminated_runtime << "\nadjacent_scans_run " << c.adjacent_scans_run
            << '\n';
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      VerifySuite suite;
      if (suite_text == "default") {
        suite = VerifySuite::Default;
      } else if (suite_text == "quick") {
        suite = VerifySuite::Quick;
      } else {
        throw Error(ErrorCode::BadParameter, "unknown suite '" + suite_text + "'");
      }
      const auto cases = build_suite(suite);
      return run_verify(cases, out).ok() ? kExitOk : kExitVerifyFailed;
    }
    if (*bench_cmd) {
      BenchConfig config;
      for (const auto& a : algos_list) config.algos.push_back(parse_or_throw<Algo>(a, parse_algo, "algorithm"));
      for (const auto& k : kinds_list) {
        config.kinds.push_back(parse_or_throw<SourceKind>(k, parse_source_kind, "kind"));
      }
      for (const auto& s : sizes_list) config.sizes.push_back(parse_size(s));
      config.reps = reps;
      config.seed = seed;
      config.aspect = aspect;
      config.brute_cap = brute_cap;

      const BenchResult result = run_bench(config);
      std::ofstream raw(out_path);
      if (!raw) throw Error(ErrorCode::IoError, "cannot open " + out_path + " for writing");
      write_bench_csv(raw, result.records);
      const std::string summary_path = out_path + ".summary.csv";
      std::ofstream summary(summary_path);
      if (!summary) throw Error(ErrorCode::IoError, "cannot open " + summary_path + " for writing");
      write_bench_summary(summary, result.summary);
      write_bench_summary(out, result.summary);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maxdist::cli
