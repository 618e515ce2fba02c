#include <gtest/gtest.h>

#include "support.hpp"

namespace liecurv {
namespace {

using test::rel;

Vector v3(double a, double b, double c) { return Vector{{a, b, c}}; }

std::vector<MetricAlgebra> magnetic_bases() {
  std::vector<MetricAlgebra> out{builtins::so3(), builtins::so3(1, 2, 3)};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(builtins::random_solvable(seed, 4));
  return out;
}

TEST(Builtins, EverySemidirectBuiltinValidates) {
  for (const auto& sd : test::semidirect_builtins()) {
    EXPECT_TRUE(validate(sd.g().spec()).passed()) << sd.name();
    EXPECT_TRUE(validate(sd.h().spec()).passed()) << sd.name();
    EXPECT_TRUE(validate_action(sd.g(), sd.h(), sd.action()).passed()) << sd.name();
    EXPECT_TRUE(validate(sd.product().spec()).passed()) << sd.name();
  }
}

TEST(Builtins, ConjugationActsByAdjoint) {
  for (const auto& g : magnetic_bases()) {
    const auto sd = builtins::conjugation(g);
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const Vector x = test::random_vector(rng, g.dim());
      const Vector y1 = test::random_vector(rng, g.dim());
      const Vector y2 = test::random_vector(rng, g.dim());
      const double scale = std::max(1.0, x.norm() * y1.norm() * std::max(1.0, g.spec().structure.max_abs()));
      EXPECT_LE(rel(sd.act(x, y1), g.bracket(x, y1), scale), 1e-12);
      const double hscale = std::max(1.0, y1.norm() * y2.norm() * std::max(1.0, g.spec().structure.max_abs()));
      EXPECT_LE(rel(sd.h_map(y1, y2), -g.ad_transpose(y1, y2), hscale), 1e-10) << g.name();
    }
  }
  const auto conj = builtins::conjugation(builtins::so3());
  EXPECT_LE(rel(conj.h_map(v3(1, 0, 0), v3(0, 1, 0)), v3(0, 0, 1), 1.0), 1e-12);
}

TEST(Builtins, MagneticClosedForms) {
  for (const auto& g : magnetic_bases()) {
    const auto sd = builtins::magnetic(g);
    EXPECT_TRUE(sd.h().is_abelian());
    EXPECT_EQ(sd.h().gram(), g.gram());
    Rng rng(32);
    for (int trial = 0; trial < 50; ++trial) {
      const Vector x = test::random_vector(rng, g.dim());
      const Vector y1 = test::random_vector(rng, g.dim());
      const Vector y2 = test::random_vector(rng, g.dim());
      const double scale = std::max(1.0, x.norm() * y1.norm() * std::max(1.0, g.spec().structure.max_abs()));
      EXPECT_LE(rel(sd.act(x, y1), -g.ad_transpose(x, y1), scale), 1e-10) << g.name();
      EXPECT_LE(rel(sd.act_transpose(x, y1), -g.bracket(x, y1), scale), 1e-10) << g.name();
      const double hscale = std::max(1.0, y1.norm() * y2.norm() * std::max(1.0, g.spec().structure.max_abs()));
      EXPECT_LE(rel(sd.h_map(y1, y2), g.ad_transpose(y2, y1), hscale), 1e-10) << g.name();
      EXPECT_LE(rel(derive_h(sd, y1, y2), g.ad_transpose(y2, y1), hscale), 1e-10) << g.name();
    }
  }
  const auto m = builtins::magnetic(builtins::so3());
  EXPECT_LE(rel(m.act(v3(1, 0, 0), v3(0, 1, 0)), v3(0, 0, 1), 1.0), 1e-12);
  EXPECT_LE(rel(m.h_map(v3(1, 0, 0), v3(0, 1, 0)), derive_h(m, v3(1, 0, 0), v3(0, 1, 0)), 1.0), 1e-12);
  EXPECT_TRUE(m.is_isometric());
  EXPECT_FALSE(builtins::magnetic(builtins::so3(1, 2, 3)).is_isometric());
}

TEST(Builtins, RandomSolvableAlgebrasAreSolvableAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (std::size_t dim : {2, 3, 4, 5, 6}) {
      const auto g = builtins::random_solvable(seed, dim);
      ASSERT_EQ(g.dim(), dim);
      Tolerances strict;
      strict.jacobi = 1e-12;
      EXPECT_TRUE(validate(g.spec(), strict).passed()) << seed << " " << dim;
      // Derived series: [g,g] is nilpotent, so ad of a commutator is nilpotent.
      const Vector c = g.bracket(g.basis(0), g.basis(dim - 1));
      Matrix p = g.ad_matrix(c);
      for (std::size_t k = 1; k < dim; ++k) p = p * g.ad_matrix(c);
      EXPECT_LE(p.norm(), 1e-9 * std::max(1.0, std::pow(g.ad_matrix(c).norm(), double(dim))));
    }
  const auto a = builtins::random_solvable(7, 4);
  const auto b = builtins::random_solvable(7, 4);
  EXPECT_EQ(a.gram(), b.gram());
  EXPECT_EQ(a.spec().structure(0, 1, 2), b.spec().structure(0, 1, 2));
}

TEST(Builtins, NamesResolve) {
  EXPECT_EQ(builtins::resolve_algebra("so3").dim(), 3U);
  EXPECT_EQ(builtins::resolve_algebra("so3:1,2,3").gram()(2, 2), 3.0);
  EXPECT_EQ(builtins::resolve_algebra("abelian:5").dim(), 5U);
  EXPECT_EQ(builtins::resolve_algebra("random:4:6").dim(), 6U);
  EXPECT_EQ(builtins::resolve_semidirect("conjugation:so3").dim_h(), 3U);
  EXPECT_FALSE(builtins::resolve_semidirect("magnetic:so3:1,2,3").is_isometric());
  EXPECT_TRUE(builtins::resolve_semidirect("euclidean").is_isometric());
  EXPECT_EQ(builtins::resolve_semidirect("random:3").product().dim(), 5U);
  EXPECT_THROW(builtins::resolve_algebra("su2"), ConfigError);
  EXPECT_THROW(builtins::resolve_semidirect("conjugation:nope"), ConfigError);
  EXPECT_THROW(builtins::resolve_algebra("abelian:x"), ConfigError);
}

}  // namespace
}  // namespace liecurv
