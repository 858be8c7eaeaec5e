#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "maxdist/baselines.hpp"
#include "maxdist/datagen.hpp"
#include "maxdist/error.hpp"

namespace maxdist {
namespace {

template <std::size_t N>
void expect_prefix(const PointSet& pts, const std::array<Point2, N>& golden) {
  ASSERT_GE(pts.size(), N);
  for (std::size_t k = 0; k < N; ++k) {
    EXPECT_EQ(pts[k], golden[k]) << "point " << k;
  }
}

TEST(SplitMix64, ReferenceOutputs) {
  // Published test vector for seed 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

TEST(Generate, GoldenPrefixes) {
  expect_prefix(generate({SourceKind::Uniform, 16, 1, 1.0, 0.0, {}}), fixtures::kUniformSeed1);
  expect_prefix(generate({SourceKind::Uniform, 8, 42, 1.0, 0.0, {}}), fixtures::kUniformSeed42);
  expect_prefix(generate({SourceKind::Gaussian, 8, 9, 1.0, 0.0, {}}), fixtures::kGaussianSeed9);
  expect_prefix(generate({SourceKind::Clustered, 8, 5, 1.0, 0.0, {}}), fixtures::kClusteredSeed5);
}

TEST(Generate, Deterministic) {
  for (SourceKind kind : {SourceKind::Uniform, SourceKind::Circle, SourceKind::Gaussian, SourceKind::Clustered}) {
    const PointSource src{kind, 4, 1, 1.0, kind == SourceKind::Circle ? 0.1 : 0.0, {}};
    EXPECT_EQ(generate(src), generate(src)) << to_string(kind);
  }
  EXPECT_NE(generate({SourceKind::Uniform, 4, 1, 1.0, 0.0, {}}), generate({SourceKind::Uniform, 4, 2, 1.0, 0.0, {}}));
}

TEST(Generate, UniformStaysInAspectBox) {
  for (double aspect : {1.0, 10.0, 1000.0, 0.25}) {
    const PointSet pts = generate({SourceKind::Uniform, 2000, 3, aspect, 0.0, {}});
    for (const Point2& p : pts) {
      EXPECT_GE(p.x, 0.0);
      EXPECT_LE(p.x, aspect);
      EXPECT_GE(p.y, 0.0);
      EXPECT_LE(p.y, 1.0);
    }
  }
}

TEST(Generate, CircleConstruction) {
  const PointSet four = generate({SourceKind::Circle, 4, 99, 1.0, 0.0, {}});
  ASSERT_EQ(four.size(), 4u);
  const double quarter = std::numbers::pi / 2;
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(four[k].x, std::cos(quarter * k), 1e-15);
    EXPECT_NEAR(four[k].y, std::sin(quarter * k), 1e-15);
  }
  EXPECT_NEAR(brute_force_diameter(four).dist, 2.0, 1e-15);

  for (std::size_t n : {5, 64, 4097}) {
    for (const Point2& p : generate({SourceKind::Circle, n, 1, 1.0, 0.0, {}})) {
      EXPECT_NEAR(std::hypot(p.x, p.y), 1.0, 1e-9);
    }
  }
  for (const Point2& p : generate({SourceKind::Circle, 200, 1, 1.0, 0.05, {}})) {
    const double r = std::hypot(p.x, p.y);
    EXPECT_GE(r, 0.95 - 1e-12);
    EXPECT_LE(r, 1.05 + 1e-12);
  }
}

TEST(Generate, ClusteredNearItsCenters) {
  const PointSet pts = generate({SourceKind::Clustered, 5000, 2, 1.0, 0.0, {}});
  const Aabb box = compute_aabb(pts);
  EXPECT_GT(box.min_x, -0.5);
  EXPECT_LT(box.max_x, 1.5);
  EXPECT_GT(box.min_y, -0.5);
  EXPECT_LT(box.max_y, 1.5);
}

TEST(Generate, BadParameters) {
  auto code_of = [](const PointSource& src) {
    try {
      generate(src);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code_of({SourceKind::Uniform, 0, 1, 1.0, 0.0, {}}), ErrorCode::BadParameter);
  EXPECT_EQ(code_of({SourceKind::Uniform, 5, 1, 0.0, 0.0, {}}), ErrorCode::BadParameter);
  EXPECT_EQ(code_of({SourceKind::Uniform, 5, 1, -2.0, 0.0, {}}), ErrorCode::BadParameter);
  EXPECT_EQ(code_of({SourceKind::Circle, 5, 1, 1.0, 1.5, {}}), ErrorCode::BadParameter);
}

TEST(SourceKind, NamesRoundTrip) {
  for (SourceKind k : {SourceKind::Uniform, SourceKind::Circle, SourceKind::Gaussian, SourceKind::Clustered,
                       SourceKind::File}) {
    EXPECT_EQ(parse_source_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_source_kind("poisson"));
}

}  // namespace
}  // namespace maxdist
