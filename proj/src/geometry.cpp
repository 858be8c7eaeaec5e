#include "maxdist/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maxdist/error.hpp"

namespace maxdist {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Aabb compute_aabb(PointView points) {
  if (points.empty()) {
    throw Error(ErrorCode::EmptyInput, "bounding box of an empty point set");
  }
  Aabb box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Point2& p : points.subspan(1)) {
    box.min_x = std::min(box.min_x, p.x);
    box.max_x = std::max(box.max_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

std::array<Point2, kCornerCount> corners(const Aabb& box) noexcept {
  return {Point2{box.min_x, box.min_y}, Point2{box.max_x, box.min_y},
          Point2{box.max_x, box.max_y}, Point2{box.min_x, box.max_y}};
}

SqDist max_corner_sq_distance(Point2 p, const Aabb& box) noexcept {
  SqDist best;
  for (const Point2& c : corners(box)) {
    best = std::max(best, squared_distance(p, c));
  }
  return best;
}

void validate_finite(PointView points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw Error(ErrorCode::NonFiniteInput, "point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
}

}  // namespace maxdist
