#pragma once

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <vector>

#include "liecurv/liecurv.hpp"

namespace liecurv::test {

/// |a - b| / scale, with scale floored at the smallest positive normal double.
inline double rel(double a, double b, double scale) {
  return std::abs(a - b) / std::max(scale, 1e-300);
}

inline double rel(double a, double b) { return rel(a, b, std::max(std::abs(a), std::abs(b))); }

inline double rel(const Vector& a, const Vector& b, double scale) {
  return (a - b).lpNorm<Eigen::Infinity>() / std::max(scale, 1e-300);
}

/// Sum of |term| over a breakdown: the magnitude of the computation that produced it.
inline double term_scale(const CurvatureBreakdown& b) {
  double s = std::abs(b.numerator);
  for (const auto& t : b.terms) s += std::abs(t.value);
  return s;
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(static_cast<Eigen::Index>(n));
  for (auto& c : v) c = rng.normal();
  return v;
}

/// [x, y] by explicit summation over the structure constants.
inline Vector brute_bracket(const MetricAlgebraSpec& spec, const Vector& x, const Vector& y) {
  const auto n = spec.dim();
  Vector out = Vector::Zero(Eigen::Index(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[Eigen::Index(k)] += spec.structure(i, j, k) * x[Eigen::Index(i)] * y[Eigen::Index(j)];
  return out;
}

/// ad(x)^T y by solving <[x, e_w], y> = <e_w, r> for every basis w with a full-pivot LU.
inline Vector brute_ad_transpose(const MetricAlgebraSpec& spec, const Vector& x, const Vector& y) {
  const auto n = Eigen::Index(spec.dim());
  Vector rhs(n);
  for (Eigen::Index w = 0; w < n; ++w) {
    const Vector e = Vector::Unit(n, w);
    rhs[w] = brute_bracket(spec, x, e).dot(spec.gram * y);
  }
  return Eigen::FullPivLU<Matrix>(spec.gram).solve(rhs);
}

/// Five-term numerator evaluated from the brute-force bracket and transpose above.
inline double brute_numerator(const MetricAlgebraSpec& spec, const Vector& x, const Vector& y) {
  const Matrix& G = spec.gram;
  auto ip = [&](const Vector& a, const Vector& b) { return a.dot(G * b); };
  const Vector txy = brute_ad_transpose(spec, x, y);
  const Vector tyx = brute_ad_transpose(spec, y, x);
  const Vector xy = brute_bracket(spec, x, y);
  const Vector s = txy + tyx;
  return 0.25 * ip(s, s) - 0.75 * ip(xy, xy) - ip(brute_ad_transpose(spec, x, x), brute_ad_transpose(spec, y, y)) -
         0.5 * ip(txy, xy) + 0.5 * ip(tyx, xy);
}

inline std::vector<SemidirectAlgebra> semidirect_builtins() {
  std::vector<SemidirectAlgebra> out;
  out.push_back(builtins::conjugation(builtins::so3()));
  out.push_back(builtins::conjugation(builtins::so3(1, 2, 3)));
  out.push_back(builtins::linear_so3_on_r3());
  out.push_back(builtins::magnetic(builtins::so3()));
  out.push_back(builtins::magnetic(builtins::so3(1, 2, 3)));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) out.push_back(builtins::random_solvable_semidirect(seed));
  return out;
}

/// Named finite algebras plus the assembled products of every semidirect builtin.
inline std::vector<MetricAlgebra> algebra_builtins() {
  std::vector<MetricAlgebra> out;
  out.push_back(builtins::so3());
  out.push_back(builtins::so3(1, 2, 3));
  out.push_back(builtins::abelian(3));
  for (const auto& sd : semidirect_builtins()) out.push_back(sd.product());
  return out;
}

}  // namespace liecurv::test
