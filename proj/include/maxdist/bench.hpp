#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "maxdist/datagen.hpp"
#include "maxdist/report.hpp"

namespace maxdist {

enum class Algo { Brute, Hull, Fast };

std::string_view to_string(Algo algo) noexcept;
std::optional<Algo> parse_algo(std::string_view text) noexcept;

DiameterReport run_algo(Algo algo, PointView points);

struct BenchRecord {
  Algo algo = Algo::Fast;
  SourceKind kind = SourceKind::Uniform;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double aspect = 1.0;
  double dist = 0.0;
  std::uint64_t wall_ns = 0;
  PhaseCounters counters;
};

inline constexpr std::string_view kBenchCsvHeader =
    "algo,kind,n,seed,aspect,dist,wall_ns,pair_evals,corner_evals,eliminated_preprocess,eliminated_runtime,"
    "adjacent_scans_run";

inline constexpr std::string_view kBenchSummaryHeader =
    "kind,n,aspect,brute_median_ns,hull_median_ns,fast_median_ns,speedup_fast_vs_brute,speedup_fast_vs_hull,"
    "extrapolated";

struct BenchConfig {
  std::vector<Algo> algos;
  std::vector<SourceKind> kinds;
  std::vector<std::size_t> sizes;
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  double aspect = 1.0;
  std::size_t brute_cap = 100'000;  // brute runs above this are extrapolated
};

/// Median timings for one (kind, n). A brute time for n above the cap is
/// scaled quadratically from the largest measured brute size of that kind
/// and flagged as extrapolated.
struct BenchSummaryRow {
  SourceKind kind = SourceKind::Uniform;
  std::size_t n = 0;
  double aspect = 1.0;
  std::optional<double> brute_ns;
  std::optional<double> hull_ns;
  std::optional<double> fast_ns;
  bool brute_extrapolated = false;

  std::optional<double> speedup_vs_brute() const;
  std::optional<double> speedup_vs_hull() const;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<BenchSummaryRow> summary;
};

/// Cases run one at a time; every rep of a case reuses the same point set.
/// Throws BadParameter on an empty list or zero reps.
BenchResult run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_bench_summary(std::ostream& out, const std::vector<BenchSummaryRow>& rows);

}  // namespace maxdist
