#include "maxdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "maxdist/baselines.hpp"
#include "maxdist/datagen.hpp"
#include "maxdist/fast_diameter.hpp"

namespace maxdist {
namespace {

void add_generated(std::vector<VerifyCase>& cases, SourceKind kind, std::size_t n, std::uint64_t seed,
                   double aspect = 1.0, double jitter = 0.0) {
  PointSource src{kind, n, seed, aspect, jitter, {}};
  std::string label = fmt::format("{} n={} seed={}", to_string(kind), n, seed);
  if (aspect != 1.0) label += fmt::format(" aspect={}", aspect);
  if (jitter != 0.0) label += fmt::format(" jitter={}", jitter);
  cases.push_back({std::move(label), generate(src), false});
}

// Uniform points snapped to a 1001 x 1001 integer grid.
PointSet integer_grid(std::size_t n, std::uint64_t seed) {
  PointSet points = generate({SourceKind::Uniform, n, seed, 1.0, 0.0, {}});
  for (Point2& p : points) {
    p.x = std::floor(p.x * 1001.0);
    p.y = std::floor(p.y * 1001.0);
  }
  return points;
}

// n points drawn from a handful of distinct positions.
PointSet duplicate_heavy(std::size_t n, std::size_t distinct, std::uint64_t seed) {
  SplitMix64 rng(seed);
  PointSet pool(distinct);
  for (Point2& p : pool) p = {rng.uniform01(), rng.uniform01()};
  PointSet points(n);
  for (Point2& p : points) p = pool[rng.next() % distinct];
  return points;
}

void add_degenerate(std::vector<VerifyCase>& cases) {
  for (std::size_t n : {2, 3, 50}) {
    cases.push_back({fmt::format("coincident n={}", n), PointSet(n, Point2{1.5, -2.25}), false});
  }
  cases.push_back({"collinear horizontal", {{0, 0}, {1, 0}, {2, 0}, {5, 0}}, true});
  cases.push_back({"collinear vertical", {{3, 7}, {3, -1}, {3, 2}, {3, 7}, {3, 0}}, true});
  cases.push_back({"collinear diagonal", {{2, 2}, {-4, -4}, {0, 0}, {9, 9}, {1, 1}}, true});
  {
    SplitMix64 rng(11);
    PointSet line(300);
    for (Point2& p : line) {
      const double t = rng.uniform01();
      p = {1.0 + 3.0 * t, -2.0 + 3.0 * t};
    }
    cases.push_back({"collinear random n=300", std::move(line), false});
  }
  cases.push_back({"two-point", {{0, 0}, {3, 4}}, true});
  cases.push_back({"two-point coincident", {{1, 1}, {1, 1}}, true});
  cases.push_back({"two-point negative", {{-1e6, 2.5}, {7.25, -3e-3}}, false});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    cases.push_back({fmt::format("duplicate-heavy n=200 seed={}", seed), duplicate_heavy(200, 5, seed), false});
  }
  for (std::size_t n : {5, 7, 101, 513}) add_generated(cases, SourceKind::Circle, n, 1);
  for (std::size_t n : {4, 64, 1024}) add_generated(cases, SourceKind::Circle, n, 1);
  add_generated(cases, SourceKind::Circle, 256, 3, 1.0, 0.01);
}

}  // namespace

bool within_relative(double a, double b, double rel_tol) noexcept {
  if (a == b) return true;
  return std::fabs(a - b) <= rel_tol * std::max(std::fabs(a), std::fabs(b));
}

std::vector<VerifyCase> build_suite(VerifySuite suite) {
  std::vector<VerifyCase> cases;
  const std::uint64_t seeds = suite == VerifySuite::Default ? 50 : 3;
  for (SourceKind kind : {SourceKind::Uniform, SourceKind::Circle, SourceKind::Gaussian, SourceKind::Clustered}) {
    for (std::size_t n : {2, 3, 10, 100, 512}) {
      for (std::uint64_t seed = 1; seed <= seeds; ++seed) add_generated(cases, kind, n, seed);
    }
  }
  for (double aspect : {10.0, 1000.0}) {
    for (std::size_t n : {10, 100, 512}) {
      for (std::uint64_t seed = 1; seed <= std::min<std::uint64_t>(seeds, 5); ++seed) {
        add_generated(cases, SourceKind::Uniform, n, seed, aspect);
      }
    }
  }
  for (std::uint64_t seed = 1; seed <= std::min<std::uint64_t>(seeds, 10); ++seed) {
    for (std::size_t n : {100, 512}) {
      cases.push_back({fmt::format("integer-grid n={} seed={}", n, seed), integer_grid(n, seed), true});
    }
  }
  add_degenerate(cases);
  return cases;
}

VerifyOutcome run_verify(std::span<const VerifyCase> cases, std::ostream& out, DiameterFn fast) {
  if (!fast) fast = [](PointView p) { return fast_diameter(p); };
  VerifyOutcome outcome;
  for (const VerifyCase& c : cases) {
    ++outcome.cases;
    const double brute = brute_force_diameter(c.points).sq_dist.value();
    const double hull = hull_diameter(c.points).sq_dist.value();
    const double quick = fast(c.points).sq_dist.value();
    const bool pass = c.integer_grid ? (hull == brute && quick == brute)
                                     : (within_relative(hull, brute) && within_relative(quick, brute));
    if (!pass) ++outcome.failures;
    fmt::print(out, "{} {}: brute={:.17g} hull={:.17g} fast={:.17g}\n", pass ? "PASS" : "FAIL", c.label,
               std::sqrt(brute), std::sqrt(hull), std::sqrt(quick));
  }
  fmt::print(out, "{} of {} cases passed\n", outcome.cases - outcome.failures, outcome.cases);
  return outcome;
}

}  // namespace maxdist
