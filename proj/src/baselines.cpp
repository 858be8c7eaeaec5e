#include "maxdist/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "maxdist/error.hpp"

namespace maxdist {
namespace {

void require_pair(PointView points) {
  if (points.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "diameter needs at least 2 points, got " + std::to_string(points.size()));
  }
}

// Twice the signed area of (o, a, b); positive for a counterclockwise turn.
double cross(Point2 o, Point2 a, Point2 b) noexcept {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

DiameterReport brute_force_diameter(PointView points) {
  require_pair(points);
  const std::size_t n = points.size();

  // Row maxima first, then locate the first attaining column only for rows
  // that improve; the inner loop stays branch-free.
  double best = -1.0;
  IndexPair witness{0, 1};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Point2 p = points[i];
    double row_max = -1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = squared_distance(p, points[j]).value();
      row_max = d > row_max ? d : row_max;
    }
    if (row_max > best) {
      best = row_max;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (squared_distance(p, points[j]).value() == row_max) {
          witness = {i, j};
          break;
        }
      }
    }
  }

  PhaseCounters counters;
  counters.pair_evals = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  return make_report(SqDist(best), witness, counters);
}

HullPolygon convex_hull(PointView points) {
  if (points.empty()) {
    return {};
  }
  IndexList order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Point2 pa = points[a];
    const Point2 pb = points[b];
    if (pa.x != pb.x) return pa.x < pb.x;
    if (pa.y != pb.y) return pa.y < pb.y;
    return a < b;
  });
  // Coincident points collapse onto their lowest index.
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              order.end());
  if (order.size() == 1) {
    return {order};
  }

  IndexList hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  const std::size_t lower_size = k + 1;
  for (std::size_t r = order.size() - 1; r-- > 0;) {
    const std::size_t idx = order[r];
    while (k >= lower_size && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);  // last vertex repeats the first
  return {hull};
}

DiameterReport hull_diameter(PointView points) {
  require_pair(points);
  const HullPolygon hull = convex_hull(points);
  const IndexList& v = hull.vertices;
  const std::size_t h = v.size();

  PhaseCounters counters;
  double best = -1.0;
  IndexPair witness{0, 1};
  auto consider = [&](std::size_t a, std::size_t b) {
    ++counters.pair_evals;
    const double d = squared_distance(points[a], points[b]).value();
    if (d > best) {
      best = d;
      witness = IndexPair::ordered(a, b);
    }
  };

  if (h == 1) {
    consider(0, 1);  // every point coincides with every other
  } else if (h == 2) {
    consider(v[0], v[1]);
  } else {
    auto area = [&](std::size_t i, std::size_t j) {
      return cross(points[v[i]], points[v[(i + 1) % h]], points[v[j]]);
    };
    std::size_t j = 1;
    for (std::size_t i = 0; i < h; ++i) {
      const std::size_t next = (i + 1) % h;
      for (std::size_t steps = 0; steps < h && area(i, (j + 1) % h) > area(i, j); ++steps) {
        j = (j + 1) % h;
      }
      consider(v[i], v[j]);
      consider(v[next], v[j]);
    }
  }
  return make_report(SqDist(best), witness, counters);
}

}  // namespace maxdist
