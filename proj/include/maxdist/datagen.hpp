#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "maxdist/geometry.hpp"

namespace maxdist {

/// SplitMix64 (Steele, Lea, Flood 2014). The state is seeded with the raw
/// 64-bit seed; each draw adds 0x9E3779B97F4A7C15 and mixes. Doubles in
/// [0, 1) take the top 53 bits of one draw.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Box-Muller pair of independent standard normals from two draws.
  Point2 gaussian_pair();

 private:
  std::uint64_t state_;
};

enum class SourceKind { Uniform, Circle, Gaussian, Clustered, File };

std::string_view to_string(SourceKind kind) noexcept;
std::optional<SourceKind> parse_source_kind(std::string_view text) noexcept;

struct PointSource {
  SourceKind kind = SourceKind::Uniform;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double aspect = 1.0;  // width / height, uniform only
  double jitter = 0.0;  // relative radial jitter, circle only
  std::string path;     // File only
};

inline constexpr std::size_t kClusterCount = 8;
inline constexpr double kClusterSigma = 0.05;

/// uniform: i.i.d. over [0, aspect] x [0, 1], x drawn before y.
/// circle: point k at angle 2*pi*k/n, radius 1 + jitter*(2u-1).
/// gaussian: standard normal per axis.
/// clustered: 8 centers uniform in the unit square, then per point a center
/// chosen by next() % 8 and a normal offset with sigma 0.05.
/// file: read_points with the format taken from the extension.
/// Throws BadParameter for n = 0, aspect <= 0 or jitter outside [0, 1).
PointSet generate(const PointSource& src);

}  // namespace maxdist
