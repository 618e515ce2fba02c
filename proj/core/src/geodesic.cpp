#include "liecurv/geodesic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace liecurv {

Scheme parse_scheme(const std::string& name) {
  if (name == "rk4") return Scheme::Rk4;
  if (name == "implicit_midpoint" || name == "midpoint") return Scheme::ImplicitMidpoint;
  throw ConfigError("unknown scheme '" + name + "' (expected rk4 or implicit_midpoint)");
}

std::string to_string(Scheme s) { return s == Scheme::Rk4 ? "rk4" : "implicit_midpoint"; }

bool is_ad_invariant(const MetricAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Matrix& ad = g.ad_basis(i);
    const double scale = std::max(1.0, ad.cwiseAbs().maxCoeff());
    if ((ad + g.metric_adjoint(ad)).cwiseAbs().maxCoeff() > g.tolerances().adjoint * scale) return false;
  }
  return true;
}

GeodesicState exact_conjugation_solution(const MetricAlgebra& g, const Vector& u0, const Vector& v0, double t) {
  if (!is_ad_invariant(g)) throw NotAdInvariant("closed-form conjugation flow needs an Ad-invariant metric");
  g.check_dim(v0);
  const Matrix flow = (t * g.ad_matrix(u0)).exp();
  return {u0, flow * v0};
}

std::vector<Matrix> reconstruct_matrix_path(const std::vector<Matrix>& generators, const std::vector<Vector>& coords,
                                            double dt) {
  if (generators.empty()) throw ConfigError("no generators for group reconstruction");
  const auto n = generators.front().rows();
  auto hat = [&](const Vector& xi) {
    if (static_cast<std::size_t>(xi.size()) != generators.size()) throw DimensionMismatch(generators.size(), xi.size());
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < generators.size(); ++i) m += xi[i] * generators[i];
    return m;
  };
  std::vector<Matrix> path;
  path.reserve(coords.size());
  if (coords.empty()) return path;
  path.push_back(Matrix::Identity(n, n));
  for (std::size_t k = 1; k < coords.size(); ++k) {
    const Matrix step = (0.5 * dt * (hat(coords[k - 1]) + hat(coords[k]))).exp();
    path.push_back(step * path.back());
  }
  return path;
}

std::vector<Matrix> so3_generators() {
  std::vector<Matrix> out(3, Matrix::Zero(3, 3));
  out[0](2, 1) = 1.0;
  out[0](1, 2) = -1.0;
  out[1](0, 2) = 1.0;
  out[1](2, 0) = -1.0;
  out[2](1, 0) = 1.0;
  out[2](0, 1) = -1.0;
  return out;
}

std::vector<Matrix> euclidean_generators() {
  std::vector<Matrix> out;
  for (const Matrix& r : so3_generators()) {
    Matrix m = Matrix::Zero(4, 4);
    m.topLeftCorner(3, 3) = r;
    out.push_back(m);
  }
  for (int j = 0; j < 3; ++j) {
    Matrix m = Matrix::Zero(4, 4);
    m(j, 3) = 1.0;
    out.push_back(m);
  }
  return out;
}

}  // namespace liecurv
