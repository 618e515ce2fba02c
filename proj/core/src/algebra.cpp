#include "liecurv/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace liecurv {

double StructureConstants::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

std::string ValidationReport::summary() const {
  if (passed()) return "pass";
  std::ostringstream out;
  out << "fail";
  for (const auto& f : failures) {
    out << "\n  " << f.invariant;
    if (f.index[0] >= 0) {
      out << " at (" << f.index[0] + 1;
      for (int n = 1; n < 3 && f.index[n] >= 0; ++n) out << "," << f.index[n] + 1;
      out << ")";
    }
    out << " residual " << f.residual;
  }
  return out.str();
}

namespace {

struct Worst {
  double residual = 0.0;
  std::array<int, 3> index{-1, -1, -1};

  void offer(double r, int i, int j, int k) {
    if (r > residual) {
      residual = r;
      index = {i, j, k};
    }
  }
};

}  // namespace

ValidationReport validate(const MetricAlgebraSpec& spec, const Tolerances& tol) {
  ValidationReport report;
  const auto n = spec.dim();
  const auto& c = spec.structure;

  if (n == 0) {
    report.failures.push_back({"positive dimension", {-1, -1, -1}, 0.0});
    return report;
  }
  if (static_cast<std::size_t>(spec.gram.rows()) != n || static_cast<std::size_t>(spec.gram.cols()) != n) {
    report.failures.push_back({"gram shape", {-1, -1, -1}, static_cast<double>(spec.gram.rows())});
    return report;
  }

  const double cmax = c.max_abs();
  const double cscale = cmax > 0.0 ? cmax : 1.0;

  Worst anti;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        anti.offer(std::abs(c(i, j, k) + c(j, i, k)) / cscale, int(i), int(j), int(k));
  if (anti.residual > tol.jacobi) report.failures.push_back({"antisymmetry", anti.index, anti.residual});

  // Cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], coefficient by coefficient.
  Worst jac;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double worst = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
          double s = 0.0;
          for (std::size_t l = 0; l < n; ++l)
            s += c(i, j, l) * c(l, k, m) + c(j, k, l) * c(l, i, m) + c(k, i, l) * c(l, j, m);
          worst = std::max(worst, std::abs(s));
        }
        jac.offer(worst / (cscale * cscale), int(i), int(j), int(k));
      }
  if (jac.residual > tol.jacobi) report.failures.push_back({"jacobi", jac.index, jac.residual});

  const Matrix& g = spec.gram;
  const double gmax = std::max(g.cwiseAbs().maxCoeff(), 1e-300);
  Worst sym;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym.offer(std::abs(g(i, j) - g(j, i)) / gmax, int(i), int(j), -1);
  if (sym.residual > tol.adjoint) report.failures.push_back({"gram symmetry", sym.index, sym.residual});

  Eigen::LLT<Matrix> llt(g);
  if (llt.info() != Eigen::Success || !g.allFinite()) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (g + g.transpose()), Eigen::EigenvaluesOnly);
    report.failures.push_back({"gram positive definite", {-1, -1, -1}, eig.eigenvalues().minCoeff()});
  }
  return report;
}

MetricAlgebra::MetricAlgebra(MetricAlgebraSpec spec, const Tolerances& tol)
    : spec_(std::move(spec)), tol_(tol) {
  if (auto report = validate(spec_, tol_); !report.passed()) {
    throw ValidationError("algebra '" + spec_.name + "' failed validation: " + report.summary());
  }
  gram_llt_.compute(spec_.gram);
  const auto n = dim();
  ad_basis_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = spec_.structure(i, j, k);
    ad_basis_.push_back(std::move(m));
  }
}

MetricAlgebra::Element MetricAlgebra::basis(std::size_t i) const {
  Element e = zero();
  e[static_cast<Eigen::Index>(i)] = 1.0;
  return e;
}

Matrix MetricAlgebra::ad_matrix(const Element& x) const {
  check_dim(x);
  Matrix m = Matrix::Zero(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != 0.0) m += x[i] * ad_basis_[i];
  return m;
}

MetricAlgebra::Element MetricAlgebra::bracket(const Element& a, const Element& b) const {
  check_dim(b);
  return ad_matrix(a) * b;
}

double MetricAlgebra::inner(const Element& a, const Element& b) const {
  check_dim(a);
  check_dim(b);
  return a.dot(spec_.gram * b);
}

Vector MetricAlgebra::solve_gram(const Vector& rhs) const { return gram_llt_.solve(rhs); }

Matrix MetricAlgebra::metric_adjoint(const Matrix& op) const {
  return gram_llt_.solve(op.transpose() * spec_.gram);
}

MetricAlgebra::Element MetricAlgebra::ad_transpose(const Element& x, const Element& y) const {
  check_dim(y);
  return gram_llt_.solve(ad_matrix(x).transpose() * (spec_.gram * y));
}

bool MetricAlgebra::is_abelian() const { return spec_.structure.max_abs() == 0.0; }

StructureConstants structure_from_entries(std::size_t dim, const std::vector<StructureEntry>& entries) {
  StructureConstants c(dim);
  for (const auto& e : entries) {
    auto in_range = [dim](int v) { return v >= 1 && static_cast<std::size_t>(v) <= dim; };
    if (!in_range(e.i) || !in_range(e.j) || !in_range(e.k))
      throw ConfigError("structure constant index out of range 1.." + std::to_string(dim));
    if (e.i == e.j) {
      if (e.value != 0.0) throw ConfigError("structure constant with i == j must be zero");
      continue;
    }
    c.set_antisymmetric(e.i - 1, e.j - 1, e.k - 1, e.value);
  }
  return c;
}

}  // namespace liecurv
