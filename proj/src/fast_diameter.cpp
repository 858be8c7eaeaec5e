#include "maxdist/fast_diameter.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "maxdist/error.hpp"

namespace maxdist {

InitialEstimate collect_extreme_candidates(PointView points, const Aabb& box) {
  if (points.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "diameter needs at least 2 points, got " + std::to_string(points.size()));
  }
  const auto box_corners = corners(box);

  std::size_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  std::array<std::size_t, kCornerCount> far{};
  std::array<std::size_t, kCornerCount> near{};
  std::array<double, kCornerCount> far_sq{};
  std::array<double, kCornerCount> near_sq{};
  for (std::size_t c = 0; c < kCornerCount; ++c) {
    far_sq[c] = near_sq[c] = squared_distance(points[0], box_corners[c]).value();
  }

  for (std::size_t i = 1; i < points.size(); ++i) {
    const Point2 p = points[i];
    if (p.x < points[min_x].x) min_x = i;
    if (p.x > points[max_x].x) max_x = i;
    if (p.y < points[min_y].y) min_y = i;
    if (p.y > points[max_y].y) max_y = i;
    for (std::size_t c = 0; c < kCornerCount; ++c) {
      const double d = squared_distance(p, box_corners[c]).value();
      if (d > far_sq[c]) {
        far_sq[c] = d;
        far[c] = i;
      }
      if (d < near_sq[c]) {
        near_sq[c] = d;
        near[c] = i;
      }
    }
  }

  InitialEstimate est;
  est.corner_evals = kCornerCount * points.size();
  auto add = [&](std::size_t idx) {
    if (std::find(est.candidate_indices.begin(), est.candidate_indices.end(), idx) == est.candidate_indices.end()) {
      est.candidate_indices.push_back(idx);
    }
  };
  for (std::size_t idx : {min_x, max_x, min_y, max_y}) add(idx);
  for (std::size_t idx : far) add(idx);
  for (std::size_t idx : near) add(idx);

  const IndexList& cand = est.candidate_indices;
  double best = -1.0;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    for (std::size_t b = a + 1; b < cand.size(); ++b) {
      const double d = squared_distance(points[cand[a]], points[cand[b]]).value();
      if (d > best) {
        best = d;
        est.witness = IndexPair::ordered(cand[a], cand[b]);
      }
    }
  }
  if (best < 0.0) {
    // A single candidate means every extreme is point 0: all points coincide.
    best = squared_distance(points[0], points[1]).value();
    est.witness = {0, 1};
  }
  est.d_sq = SqDist(best);
  return est;
}

IndexList eliminate(PointView points, std::span<const std::size_t> indices, const Aabb& box, SqDist d_sq) {
  IndexList kept;
  kept.reserve(indices.size());
  for (std::size_t idx : indices) {
    if (max_corner_sq_distance(points[idx], box) > d_sq) {
      kept.push_back(idx);
    }
  }
  return kept;
}

QuadrantPartition partition(PointView points, std::span<const std::size_t> survivors, const Aabb& box) {
  QuadrantPartition part;
  part.center = box.center();
  const double cx = part.center.x;
  const double cy = part.center.y;
  for (std::size_t idx : survivors) {
    const Point2 p = points[idx];
    Corner cell;
    if (p.y < cy) {
      cell = p.x < cx ? kLowerLeft : kLowerRight;
    } else {
      cell = p.x < cx ? kUpperLeft : kUpperRight;
    }
    part.omega[cell].push_back(idx);
  }
  return part;
}

AdjacencyThresholds adjacency_thresholds(const Aabb& box) noexcept {
  const double a = box.width();
  const double b = box.height();
  const double half_a = 0.5 * a;
  const double half_b = 0.5 * b;
  return {SqDist(a * a + b * b), SqDist(a * a + half_b * half_b), SqDist(b * b + half_a * half_a)};
}

ScanResult cross_scan(PointView points, std::span<const std::size_t> set_a, std::span<const std::size_t> set_b,
                      SqDist d_sq_in, IndexPair witness_in, std::optional<Point2> far_corner) {
  ScanResult r{d_sq_in, witness_in, 0, 0};
  double best = d_sq_in.value();
  for (std::size_t ia : set_a) {
    const Point2 p = points[ia];
    if (far_corner) {
      ++r.corner_evals;
      if (squared_distance(p, *far_corner).value() <= best) continue;
    }
    r.pair_evals += set_b.size();
    for (std::size_t ib : set_b) {
      const double d = squared_distance(p, points[ib]).value();
      if (d > best) {
        best = d;
        r.witness = IndexPair::ordered(ia, ib);
      }
    }
  }
  r.d_sq = SqDist(best);
  return r;
}

namespace {

class Pipeline {
 public:
  Pipeline(PointView points, PipelineTrace* trace) : points_(points), trace_(trace) {}

  DiameterReport run() {
    const std::size_t n = points_.size();
    box_ = compute_aabb(points_);
    const auto box_corners = corners(box_);
    const AdjacencyThresholds thr = adjacency_thresholds(box_);

    InitialEstimate init = collect_extreme_candidates(points_, box_);
    d_sq_ = init.d_sq;
    witness_ = init.witness;
    counters_.corner_evals += init.corner_evals;

    IndexList all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    IndexList survivors = eliminate(points_, all, box_, d_sq_);
    counters_.corner_evals += kCornerCount * n;
    counters_.eliminated_preprocess = n - survivors.size();

    QuadrantPartition part = partition(points_, survivors, box_);
    part.eliminated_count = counters_.eliminated_preprocess;
    for (std::size_t c = 0; c < kCornerCount; ++c) {
      counters_.survivors[c] = part.omega[c].size();
      eliminated_at_[c] = d_sq_;
    }
    if (trace_) {
      trace_->box = box_;
      trace_->initial = init;
      trace_->partition = part;
      trace_->eliminations.push_back({d_sq_, removed_from(all, survivors)});
    }
    omega_ = std::move(part.omega);

    if (!exhausted(thr)) {
      scan(kLowerLeft, kUpperRight, box_corners[kUpperRight]);
    }
    if (!exhausted(thr)) {
      reduce(kLowerRight);
      reduce(kUpperLeft);
      scan(kLowerRight, kUpperLeft, box_corners[kUpperLeft]);
    }

    for (std::size_t k = 0; k < kAdjacentPairs.size(); ++k) {
      const auto [first, second] = kAdjacentPairs[k];
      // Lower/upper pairs sit side by side; left/right pairs are stacked.
      const bool side_by_side = (k % 2) == 0;
      const SqDist gate = side_by_side ? thr.dx_adj_sq : thr.dy_adj_sq;
      const bool run_scan = !exhausted(thr) && d_sq_ <= gate;
      if (run_scan) {
        reduce(first);
        reduce(second);
        scan(first, second, std::nullopt);
        ++counters_.adjacent_scans_run;
      }
      if (trace_) {
        trace_->adjacent.push_back({k, gate, d_sq_, run_scan});
      }
    }

    return make_report(d_sq_, witness_, counters_);
  }

 private:
  // No pair can exceed the box diagonal.
  bool exhausted(const AdjacencyThresholds& thr) const { return d_sq_ >= thr.d2_sq; }

  void scan(Corner a, Corner b, std::optional<Point2> far_corner) {
    const ScanResult r = cross_scan(points_, omega_[a], omega_[b], d_sq_, witness_, far_corner);
    d_sq_ = r.d_sq;
    witness_ = r.witness;
    counters_.pair_evals += r.pair_evals;
    counters_.corner_evals += r.corner_evals;
  }

  // Re-run the corner test on one cell if the estimate grew since its last pass.
  void reduce(Corner c) {
    if (d_sq_ == eliminated_at_[c]) return;
    IndexList kept = eliminate(points_, omega_[c], box_, d_sq_);
    counters_.corner_evals += kCornerCount * omega_[c].size();
    counters_.eliminated_runtime += omega_[c].size() - kept.size();
    if (trace_ && kept.size() != omega_[c].size()) {
      trace_->eliminations.push_back({d_sq_, removed_from(omega_[c], kept)});
    }
    omega_[c] = std::move(kept);
    eliminated_at_[c] = d_sq_;
  }

  // Both lists share input order, so one merge pass recovers the dropped indices.
  static IndexList removed_from(const IndexList& before, const IndexList& after) {
    IndexList removed;
    std::size_t k = 0;
    for (std::size_t idx : before) {
      if (k < after.size() && after[k] == idx) {
        ++k;
      } else {
        removed.push_back(idx);
      }
    }
    return removed;
  }

  PointView points_;
  PipelineTrace* trace_;
  Aabb box_;
  SqDist d_sq_;
  IndexPair witness_;
  PhaseCounters counters_;
  std::array<IndexList, kCornerCount> omega_;
  std::array<SqDist, kCornerCount> eliminated_at_{};
};

}  // namespace

DiameterReport fast_diameter(PointView points, PipelineTrace* trace) {
  if (points.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "diameter needs at least 2 points, got " + std::to_string(points.size()));
  }
  validate_finite(points);
  return Pipeline(points, trace).run();
}

}  // namespace maxdist
