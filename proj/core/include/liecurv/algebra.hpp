#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "liecurv/errors.hpp"

namespace liecurv {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Coordinates of a Lie algebra element in the declared basis.
using AlgebraElement = Vector;

struct Tolerances {
  double jacobi = 1e-10;
  double adjoint = 1e-10;
  /// Slack used for the action checks (derivation, homomorphism, skewness).
  double action = 1e-10;
};

/// Structure constants c(i,j,k): [e_i, e_j] = sum_k c(i,j,k) e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), data_(dim * dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  /// Sets c(i,j,k) = value and c(j,i,k) = -value.
  void set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, double value) {
    (*this)(i, j, k) = value;
    (*this)(j, i, k) = -value;
  }
  double max_abs() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

struct MetricAlgebraSpec {
  StructureConstants structure;
  Matrix gram;
  std::string name;

  std::size_t dim() const { return structure.dim(); }
};

struct ValidationFailure {
  std::string invariant;
  std::array<int, 3> index{-1, -1, -1};
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;

  bool passed() const { return failures.empty(); }
  std::string summary() const;
};

/// Checks antisymmetry, the Jacobi identity and positive definiteness of the Gram matrix.
/// Each failing invariant is reported once with its worst-offending index triple.
ValidationReport validate(const MetricAlgebraSpec& spec, const Tolerances& tol = {});

/// A validated finite-dimensional Lie algebra with an inner product.
///
/// The Gram factorization and the matrices of ad(e_i) are computed once on construction;
/// afterwards the object is immutable and every member is safe to call concurrently.
class MetricAlgebra {
 public:
  using Element = AlgebraElement;

  /// Throws ValidationError carrying the report summary if `spec` is invalid.
  explicit MetricAlgebra(MetricAlgebraSpec spec, const Tolerances& tol = {});

  std::size_t dim() const { return spec_.dim(); }
  const MetricAlgebraSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  const Matrix& gram() const { return spec_.gram; }
  const Tolerances& tolerances() const { return tol_; }

  Element zero() const { return Vector::Zero(static_cast<Eigen::Index>(dim())); }
  Element basis(std::size_t i) const;

  Element bracket(const Element& a, const Element& b) const;
  double inner(const Element& a, const Element& b) const;
  double norm2(const Element& a) const { return inner(a, a); }

  /// Matrix of ad(x) = [x, .] acting on coordinate vectors.
  Matrix ad_matrix(const Element& x) const;
  const Matrix& ad_basis(std::size_t i) const { return ad_basis_[i]; }

  /// The adjoint of ad(x) with respect to the inner product, applied to y.
  Element ad_transpose(const Element& x, const Element& y) const;
  /// G^{-1} M^T G: the metric adjoint of an arbitrary operator.
  Matrix metric_adjoint(const Matrix& op) const;
  /// Solves G r = rhs with the cached factorization.
  Vector solve_gram(const Vector& rhs) const;

  bool is_abelian() const;

  void check_dim(const Element& a) const {
    if (static_cast<std::size_t>(a.size()) != dim()) throw DimensionMismatch(dim(), a.size());
  }

 private:
  MetricAlgebraSpec spec_;
  Tolerances tol_;
  Eigen::LLT<Matrix> gram_llt_;
  std::vector<Matrix> ad_basis_;
};

/// Builds a spec from 1-based (i, j, k, value) quadruples; antisymmetric completion is applied.
struct StructureEntry {
  int i;
  int j;
  int k;
  double value;
};
StructureConstants structure_from_entries(std::size_t dim, const std::vector<StructureEntry>& entries);

}  // namespace liecurv
