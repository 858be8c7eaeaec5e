#pragma once

#include <array>
#include <compare>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace maxdist {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Index order is the identity of a point; witnesses refer to it.
using PointSet = std::vector<Point2>;
using PointView = std::span<const Point2>;
using IndexList = std::vector<std::size_t>;

/// Squared Euclidean distance. All comparisons in the library happen on
/// squared values; the root is taken only when a result is reported.
class SqDist {
 public:
  constexpr SqDist() = default;
  constexpr explicit SqDist(double value) : value_(value) {}

  constexpr double value() const noexcept { return value_; }
  double root() const { return std::sqrt(value_); }

  friend constexpr auto operator<=>(SqDist, SqDist) = default;

 private:
  double value_ = 0.0;
};

/// Closed axis-aligned box. Degenerate (zero width or height) boxes are valid.
struct Aabb {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const noexcept { return max_x - min_x; }
  double height() const noexcept { return max_y - min_y; }
  Point2 center() const noexcept { return {0.5 * (min_x + max_x), 0.5 * (min_y + max_y)}; }
  bool contains(Point2 p) const noexcept {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }

  friend bool operator==(const Aabb&, const Aabb&) = default;
};

/// Corner slots, counterclockwise from (min_x, min_y). Quadrant sets use the
/// same numbering throughout the library.
enum Corner : std::size_t { kLowerLeft = 0, kLowerRight = 1, kUpperRight = 2, kUpperLeft = 3 };

inline constexpr std::size_t kCornerCount = 4;

/// (p.x-q.x)^2 + (p.y-q.y)^2. Every module goes through this expression so
/// identical inputs give bit-identical values everywhere.
inline SqDist squared_distance(Point2 p, Point2 q) noexcept {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return SqDist(dx * dx + dy * dy);
}

/// Tight bounding box in one pass. Throws EmptyInput on an empty set.
Aabb compute_aabb(PointView points);

std::array<Point2, kCornerCount> corners(const Aabb& box) noexcept;

/// Largest squared distance from p to any corner of the box. For p inside the
/// box this bounds the squared distance from p to every point of the box.
SqDist max_corner_sq_distance(Point2 p, const Aabb& box) noexcept;

/// Throws NonFiniteInput naming the first offending index.
void validate_finite(PointView points);

}  // namespace maxdist
