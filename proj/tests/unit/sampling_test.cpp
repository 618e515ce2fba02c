#include <gtest/gtest.h>

#include "support.hpp"

namespace liecurv {
namespace {

TEST(Sampling, OrthonormalAndDeterministic) {
  const auto g = builtins::so3();
  const auto planes = sample_planes(g, 7, 3);
  ASSERT_EQ(planes.size(), 3U);
  for (const auto& p : planes) {
    EXPECT_LE(std::abs(g.inner(p.x, p.y)), 1e-12);
    EXPECT_NEAR(g.inner(p.x, p.x), 1.0, 1e-12);
    EXPECT_NEAR(g.inner(p.y, p.y), 1.0, 1e-12);
  }
  const auto again = sample_planes(g, 7, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(planes[i].x, again[i].x);
    EXPECT_EQ(planes[i].y, again[i].y);
  }
  EXPECT_TRUE(sample_planes(g, 7, 0).empty());
  EXPECT_NE(sample_planes(g, 8, 1)[0].x, planes[0].x);
}

TEST(Sampling, OrthonormalInNonEuclideanGram) {
  const auto g = builtins::random_solvable(2, 5);
  for (const auto& p : sample_planes(g, 1, 20)) {
    EXPECT_LE(std::abs(g.inner(p.x, p.y)), 1e-12);
    EXPECT_NEAR(g.inner(p.x, p.x), 1.0, 1e-12);
  }
}

TEST(Sampling, ProductFamilies) {
  const auto sd = builtins::conjugation(builtins::so3(1, 2, 3));
  const auto& p = sd.product();
  auto g_part = [&](const Vector& v) { return sd.split(v).first.norm(); };
  auto h_part = [&](const Vector& v) { return sd.split(v).second.norm(); };
  for (const auto& pl : sample_product_planes(p, 3, PlaneFamily::GG, 1, 10)) {
    EXPECT_EQ(h_part(pl.x), 0.0);
    EXPECT_EQ(h_part(pl.y), 0.0);
  }
  for (const auto& pl : sample_product_planes(p, 3, PlaneFamily::HH, 1, 10)) {
    EXPECT_EQ(g_part(pl.x), 0.0);
    EXPECT_EQ(g_part(pl.y), 0.0);
  }
  for (const auto& pl : sample_product_planes(p, 3, PlaneFamily::GH, 1, 10)) {
    EXPECT_EQ(h_part(pl.x), 0.0);
    EXPECT_EQ(g_part(pl.y), 0.0);  // blocks are orthogonal, so Gram-Schmidt keeps y in h
  }
  EXPECT_EQ(parse_family("contains-h"), PlaneFamily::ContainsH);
  EXPECT_THROW(parse_family("xy"), ConfigError);
}

TEST(Sampling, RngIsPinned) {
  // mt19937_64 with seed 5489 produces 14514284786278117030 first.
  std::mt19937_64 engine(5489);
  EXPECT_EQ(engine(), 14514284786278117030ULL);
  Rng a(5489);
  EXPECT_EQ(a.uniform(), double(14514284786278117030ULL >> 11) * 0x1.0p-53);
  Rng b(1);
  Rng c(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(b.normal(), c.normal());
}

TEST(Sampling, ExhaustionIsReported) {
  const auto g = builtins::so3();
  auto collinear = [](Rng& rng, bool) {
    (void)rng.normal();
    return Vector{{1.0, 0.0, 0.0}};
  };
  EXPECT_THROW(sample_planes(g, collinear, 1, 3), SamplingExhausted);
}

}  // namespace
}  // namespace liecurv
