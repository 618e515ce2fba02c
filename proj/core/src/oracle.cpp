#include <Eigen/LU>

#include "liecurv/curvature.hpp"

namespace liecurv {

ConnectionOracle::ConnectionOracle(const MetricAlgebraSpec& spec) : dim_(spec.dim()), gram_(spec.gram) {
  const auto n = dim_;
  structure_.resize(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) structure_[(i * n + j) * n + k] = spec.structure(i, j, k);

  const Matrix gram_inv = Eigen::FullPivLU<Matrix>(gram_).inverse();
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return structure_[(i * n + j) * n + k]; };

  // transpose[i][j] = ad(e_i)^T e_j: components l of the pairing <[e_i, e_l], e_j>, then G^{-1}.
  std::vector<Vector> transpose(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector pairing = Vector::Zero(n);
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) pairing[l] += c(i, l, m) * gram_(m, j);
      transpose[i * n + j] = gram_inv * pairing;
    }

  gamma_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector br(n);
      for (std::size_t k = 0; k < n; ++k) br[k] = c(i, j, k);
      gamma_[i * n + j] = 0.5 * transpose[i * n + j] + 0.5 * transpose[j * n + i] - 0.5 * br;
    }
}

Vector ConnectionOracle::connection(const Vector& x, const Vector& y) const {
  Vector out = Vector::Zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (y[j] != 0.0) out += (x[i] * y[j]) * gamma_[i * dim_ + j];
  }
  return out;
}

Vector ConnectionOracle::field_bracket(const Vector& x, const Vector& y) const {
  Vector out = Vector::Zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) out[k] += x[i] * y[j] * structure_[(i * dim_ + j) * dim_ + k];
  return kFieldBracketSign * out;
}

Vector ConnectionOracle::curvature(const Vector& x, const Vector& y, const Vector& z) const {
  return connection(x, connection(y, z)) - connection(y, connection(x, z)) - connection(field_bracket(x, y), z);
}

double ConnectionOracle::numerator(const Vector& x, const Vector& y) const {
  return curvature(x, y, y).dot(gram_ * x);
}

double oracle_curvature(const MetricAlgebraSpec& spec, const Vector& x, const Vector& y) {
  return ConnectionOracle(spec).numerator(x, y);
}

}  // namespace liecurv
