#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "maxdist/geometry.hpp"
#include "maxdist/report.hpp"

namespace maxdist {

/// Best pair among the axis-extreme and corner-extreme points (at most 12).
/// d_sq is never below max(width, height)^2 of the bounding box.
struct InitialEstimate {
  IndexList candidate_indices;
  SqDist d_sq;
  IndexPair witness;
  std::uint64_t corner_evals = 0;
};

/// Survivors split into the four quadrant cells of the box, numbered by
/// Corner. Cells are append-only index lists.
struct QuadrantPartition {
  std::array<IndexList, kCornerCount> omega;
  std::size_t eliminated_count = 0;
  Point2 center;
};

/// Largest squared distances possible between points of two quadrant cells
/// that share an edge (x-adjacent: side by side, y-adjacent: stacked), and
/// the box diagonal.
struct AdjacencyThresholds {
  SqDist d2_sq;
  SqDist dx_adj_sq;
  SqDist dy_adj_sq;
};

struct ScanResult {
  SqDist d_sq;
  IndexPair witness;
  std::uint64_t pair_evals = 0;
  std::uint64_t corner_evals = 0;
};

InitialEstimate collect_extreme_candidates(PointView points, const Aabb& box);

/// Keeps the indices whose farthest box corner is strictly farther than d_sq.
/// A dropped point is within sqrt(d_sq) of every point of the box, so it can
/// never take part in a pair longer than the current estimate.
IndexList eliminate(PointView points, std::span<const std::size_t> indices, const Aabb& box, SqDist d_sq);

/// Half-plane split about the box center; ties go to the >= side.
QuadrantPartition partition(PointView points, std::span<const std::size_t> survivors, const Aabb& box);

AdjacencyThresholds adjacency_thresholds(const Aabb& box) noexcept;

/// Max over set_a x set_b folded into (d_sq_in, witness_in). The witness only
/// changes on a strict improvement. When `far_corner` is given, a point of
/// set_a whose distance to it does not exceed the running estimate skips its
/// inner loop; far_corner must be at least as far from every set_a point as
/// any point of set_b's cell is.
ScanResult cross_scan(PointView points, std::span<const std::size_t> set_a, std::span<const std::size_t> set_b,
                      SqDist d_sq_in, IndexPair witness_in, std::optional<Point2> far_corner = std::nullopt);

/// Pairs of quadrant cells that share an edge, in scan order.
inline constexpr std::array<std::array<Corner, 2>, 4> kAdjacentPairs{{
    {kLowerLeft, kLowerRight},
    {kLowerRight, kUpperRight},
    {kUpperRight, kUpperLeft},
    {kUpperLeft, kLowerLeft},
}};

/// Optional record of every pruning decision made by fast_diameter, for
/// auditing the pipeline from tests and tools.
struct PipelineTrace {
  struct Elimination {
    SqDist d_sq;
    IndexList removed;
  };
  struct AdjacentDecision {
    std::size_t pair = 0;  // index into kAdjacentPairs
    SqDist threshold;
    SqDist d_sq;
    bool scanned = false;
  };

  Aabb box;
  InitialEstimate initial;
  QuadrantPartition partition;  // as split, before any runtime reduction
  std::vector<Elimination> eliminations;
  std::vector<AdjacentDecision> adjacent;
};

/// Exact diameter by corner elimination and quadrant scans. Throws
/// TooFewPoints for N < 2 and NonFiniteInput for NaN or infinite input.
DiameterReport fast_diameter(PointView points, PipelineTrace* trace = nullptr);

}  // namespace maxdist
