#include "maxdist/datagen.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "maxdist/error.hpp"
#include "maxdist/point_io.hpp"

namespace maxdist {

Point2 SplitMix64::gaussian_pair() {
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::string_view to_string(SourceKind kind) noexcept {
  switch (kind) {
    case SourceKind::Uniform: return "uniform";
    case SourceKind::Circle: return "circle";
    case SourceKind::Gaussian: return "gaussian";
    case SourceKind::Clustered: return "clustered";
    case SourceKind::File: return "file";
  }
  return "unknown";
}

std::optional<SourceKind> parse_source_kind(std::string_view text) noexcept {
  for (SourceKind k : {SourceKind::Uniform, SourceKind::Circle, SourceKind::Gaussian, SourceKind::Clustered,
                       SourceKind::File}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

PointSet generate(const PointSource& src) {
  if (src.kind == SourceKind::File) {
    return read_points(src.path, format_from_path(src.path));
  }
  if (src.n == 0) throw Error(ErrorCode::BadParameter, "point count must be positive");
  if (!(src.aspect > 0.0) || !std::isfinite(src.aspect)) {
    throw Error(ErrorCode::BadParameter, "aspect must be a positive finite number");
  }
  if (!(src.jitter >= 0.0 && src.jitter < 1.0)) {
    throw Error(ErrorCode::BadParameter, "jitter must lie in [0, 1)");
  }

  SplitMix64 rng(src.seed);
  PointSet points;
  points.reserve(src.n);
  switch (src.kind) {
    case SourceKind::Uniform:
      for (std::size_t i = 0; i < src.n; ++i) {
        const double x = src.aspect * rng.uniform01();
        const double y = rng.uniform01();
        points.push_back({x, y});
      }
      break;
    case SourceKind::Circle:
      for (std::size_t k = 0; k < src.n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(src.n);
        const double r = src.jitter > 0.0 ? 1.0 + src.jitter * (2.0 * rng.uniform01() - 1.0) : 1.0;
        points.push_back({r * std::cos(angle), r * std::sin(angle)});
      }
      break;
    case SourceKind::Gaussian:
      for (std::size_t i = 0; i < src.n; ++i) points.push_back(rng.gaussian_pair());
      break;
    case SourceKind::Clustered: {
      std::array<Point2, kClusterCount> centers;
      for (Point2& c : centers) {
        c.x = rng.uniform01();
        c.y = rng.uniform01();
      }
      for (std::size_t i = 0; i < src.n; ++i) {
        const Point2 c = centers[rng.next() % kClusterCount];
        const Point2 g = rng.gaussian_pair();
        points.push_back({c.x + kClusterSigma * g.x, c.y + kClusterSigma * g.y});
      }
      break;
    }
    case SourceKind::File:
      break;
  }
  return points;
}

}  // namespace maxdist
