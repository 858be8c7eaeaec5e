#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "maxdist/geometry.hpp"

namespace maxdist {

/// Witness indices, normalized so that i <= j.
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;

  static IndexPair ordered(std::size_t a, std::size_t b) noexcept {
    return a <= b ? IndexPair{a, b} : IndexPair{b, a};
  }

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Work counters. Algorithms that lack a phase leave its counter at zero.
struct PhaseCounters {
  std::uint64_t pair_evals = 0;
  std::uint64_t corner_evals = 0;
  std::uint64_t eliminated_preprocess = 0;
  std::uint64_t eliminated_runtime = 0;
  std::array<std::uint64_t, kCornerCount> survivors{};
  std::uint32_t adjacent_scans_run = 0;
};

struct DiameterReport {
  SqDist sq_dist;
  double dist = 0.0;
  IndexPair witness;
  PhaseCounters counters;
};

inline DiameterReport make_report(SqDist sq, IndexPair witness, const PhaseCounters& counters) {
  return DiameterReport{sq, sq.root(), witness, counters};
}

}  // namespace maxdist
