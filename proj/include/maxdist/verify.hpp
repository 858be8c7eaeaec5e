#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "maxdist/geometry.hpp"
#include "maxdist/report.hpp"

namespace maxdist {

inline constexpr double kRelTolerance = 1e-12;

/// |a - b| <= rel_tol * max(|a|, |b|); equal values always agree.
bool within_relative(double a, double b, double rel_tol = kRelTolerance) noexcept;

struct VerifyCase {
  std::string label;
  PointSet points;
  bool integer_grid = false;  // results must match bit for bit
};

enum class VerifySuite { Default, Quick };

/// Generated sets over every kind, size and seed of the suite, plus the
/// degenerate families: coincident, collinear, two-point, odd and even
/// circles, extreme aspect ratios, duplicate-heavy and integer-grid sets.
std::vector<VerifyCase> build_suite(VerifySuite suite);

using DiameterFn = std::function<DiameterReport(PointView)>;

struct VerifyOutcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool ok() const noexcept { return failures == 0; }
};

/// Runs brute, hull and fast on every case and prints one PASS/FAIL line
/// each. `fast` replaces fast_diameter when given (used to exercise the
/// failure path).
VerifyOutcome run_verify(std::span<const VerifyCase> cases, std::ostream& out, DiameterFn fast = {});

}  // namespace maxdist
