#include "maxdist/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "maxdist/baselines.hpp"
#include "maxdist/error.hpp"
#include "maxdist/fast_diameter.hpp"

namespace maxdist {
namespace {

double median(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  if (values.size() % 2 == 1) return static_cast<double>(values[m]);
  return 0.5 * (static_cast<double>(values[m - 1]) + static_cast<double>(values[m]));
}

std::string optional_field(const std::optional<double>& v) {
  return v ? fmt::format("{:.6g}", *v) : std::string();
}

}  // namespace

std::string_view to_string(Algo algo) noexcept {
  switch (algo) {
    case Algo::Brute: return "brute";
    case Algo::Hull: return "hull";
    case Algo::Fast: return "fast";
  }
  return "unknown";
}

std::optional<Algo> parse_algo(std::string_view text) noexcept {
  for (Algo a : {Algo::Brute, Algo::Hull, Algo::Fast}) {
    if (text == to_string(a)) return a;
  }
  return std::nullopt;
}

DiameterReport run_algo(Algo algo, PointView points) {
  switch (algo) {
    case Algo::Brute: return brute_force_diameter(points);
    case Algo::Hull: return hull_diameter(points);
    case Algo::Fast: return fast_diameter(points);
  }
  throw Error(ErrorCode::BadParameter, "unknown algorithm");
}

std::optional<double> BenchSummaryRow::speedup_vs_brute() const {
  if (!brute_ns || !fast_ns || *fast_ns <= 0.0) return std::nullopt;
  return *brute_ns / *fast_ns;
}

std::optional<double> BenchSummaryRow::speedup_vs_hull() const {
  if (!hull_ns || !fast_ns || *fast_ns <= 0.0) return std::nullopt;
  return *hull_ns / *fast_ns;
}

BenchResult run_bench(const BenchConfig& config) {
  if (config.algos.empty() || config.kinds.empty() || config.sizes.empty()) {
    throw Error(ErrorCode::BadParameter, "bench needs at least one algorithm, kind and size");
  }
  if (config.reps == 0) throw Error(ErrorCode::BadParameter, "reps must be positive");
  if (std::find(config.kinds.begin(), config.kinds.end(), SourceKind::File) != config.kinds.end()) {
    throw Error(ErrorCode::BadParameter, "bench generates its inputs; kind 'file' is not supported");
  }

  std::vector<std::size_t> sizes = config.sizes;
  std::sort(sizes.begin(), sizes.end());

  BenchResult result;
  for (SourceKind kind : config.kinds) {
    std::optional<std::pair<std::size_t, double>> brute_ref;  // (n, median ns)
    for (std::size_t n : sizes) {
      const PointSource src{kind, n, config.seed, config.aspect, 0.0, {}};
      const PointSet points = generate(src);
      BenchSummaryRow row{kind, n, config.aspect, {}, {}, {}, false};

      for (Algo algo : config.algos) {
        if (algo == Algo::Brute && n > config.brute_cap) {
          if (brute_ref) {
            const double scale = static_cast<double>(n) / static_cast<double>(brute_ref->first);
            row.brute_ns = brute_ref->second * scale * scale;
            row.brute_extrapolated = true;
          }
          continue;
        }
        std::vector<std::uint64_t> times;
        for (std::size_t rep = 0; rep < config.reps; ++rep) {
          const auto start = std::chrono::steady_clock::now();
          const DiameterReport report = run_algo(algo, points);
          const auto stop = std::chrono::steady_clock::now();
          const auto ns = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
          times.push_back(ns);
          result.records.push_back({algo, kind, n, config.seed, config.aspect, report.dist, ns, report.counters});
        }
        const double med = median(times);
        switch (algo) {
          case Algo::Brute:
            row.brute_ns = med;
            brute_ref = std::make_pair(n, med);
            break;
          case Algo::Hull: row.hull_ns = med; break;
          case Algo::Fast: row.fast_ns = med; break;
        }
      }
      result.summary.push_back(row);
    }
  }
  return result;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  fmt::print(out, "{}\n", kBenchCsvHeader);
  for (const BenchRecord& r : records) {
    fmt::print(out, "{},{},{},{},{},{:.17g},{},{},{},{},{},{}\n", to_string(r.algo), to_string(r.kind), r.n, r.seed,
               r.aspect, r.dist, r.wall_ns, r.counters.pair_evals, r.counters.corner_evals,
               r.counters.eliminated_preprocess, r.counters.eliminated_runtime, r.counters.adjacent_scans_run);
  }
}

void write_bench_summary(std::ostream& out, const std::vector<BenchSummaryRow>& rows) {
  fmt::print(out, "{}\n", kBenchSummaryHeader);
  for (const BenchSummaryRow& r : rows) {
    fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", to_string(r.kind), r.n, r.aspect, optional_field(r.brute_ns),
               optional_field(r.hull_ns), optional_field(r.fast_ns), optional_field(r.speedup_vs_brute()),
               optional_field(r.speedup_vs_hull()), r.brute_extrapolated ? "*" : "");
  }
}

}  // namespace maxdist
