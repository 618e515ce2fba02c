#include "liecurv/semidirect.hpp"

#include <algorithm>
#include <cmath>

namespace liecurv {

namespace {

double relative_gap(double lhs, double rhs, double scale) {
  const double diff = std::abs(lhs - rhs);
  if (diff == 0.0) return 0.0;
  return diff / std::max(scale, 1e-300);
}

}  // namespace

ActionSpec action_from_entries(std::size_t dim_g, std::size_t dim_h, const std::vector<ActionEntry>& entries) {
  ActionSpec action;
  action.generators.assign(dim_g, Matrix::Zero(dim_h, dim_h));
  for (const auto& e : entries) {
    if (e.g_index < 1 || static_cast<std::size_t>(e.g_index) > dim_g || e.row < 1 ||
        static_cast<std::size_t>(e.row) > dim_h || e.col < 1 || static_cast<std::size_t>(e.col) > dim_h)
      throw ConfigError("action entry index out of range");
    action.generators[e.g_index - 1](e.row - 1, e.col - 1) = e.value;
  }
  return action;
}

ValidationReport validate_action(const MetricAlgebra& g, const MetricAlgebra& h, const ActionSpec& action,
                                 const Tolerances& tol) {
  ValidationReport report;
  const auto n = g.dim();
  const auto m = h.dim();
  if (action.generators.size() != n) {
    report.failures.push_back({"action generator count", {-1, -1, -1}, double(action.generators.size())});
    return report;
  }
  double bscale = 0.0;
  for (const auto& b : action.generators) {
    if (static_cast<std::size_t>(b.rows()) != m || static_cast<std::size_t>(b.cols()) != m) {
      report.failures.push_back({"action generator shape", {-1, -1, -1}, double(b.rows())});
      return report;
    }
    bscale = std::max(bscale, b.cwiseAbs().maxCoeff());
  }
  if (bscale == 0.0) return report;

  // b(e_i)[Y1,Y2] = [b(e_i)Y1, Y2] + [Y1, b(e_i)Y2] on basis pairs.
  const double hscale = std::max(h.spec().structure.max_abs(), 1.0);
  double worst = 0.0;
  std::array<int, 3> at{-1, -1, -1};
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& b = action.generators[i];
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        const Vector yp = h.basis(p);
        const Vector yq = h.basis(q);
        const Vector lhs = b * h.bracket(yp, yq);
        const Vector rhs = h.bracket(b * yp, yq) + h.bracket(yp, b * yq);
        const double r = (lhs - rhs).cwiseAbs().maxCoeff() / (bscale * hscale);
        if (r > worst) {
          worst = r;
          at = {int(i), int(p), int(q)};
        }
      }
  }
  if (worst > tol.action) report.failures.push_back({"action derivation", at, worst});

  // b([e_i,e_j]) = b(e_i)b(e_j) - b(e_j)b(e_i).
  const double gscale = std::max(g.spec().structure.max_abs(), 1.0);
  worst = 0.0;
  at = {-1, -1, -1};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector c = g.bracket(g.basis(i), g.basis(j));
      Matrix lhs = Matrix::Zero(m, m);
      for (std::size_t k = 0; k < n; ++k) lhs += c[k] * action.generators[k];
      const Matrix rhs = action.generators[i] * action.generators[j] - action.generators[j] * action.generators[i];
      const double r = (lhs - rhs).cwiseAbs().maxCoeff() / (bscale * std::max(bscale, gscale));
      if (r > worst) {
        worst = r;
        at = {int(i), int(j), -1};
      }
    }
  if (worst > tol.action) report.failures.push_back({"action homomorphism", at, worst});
  return report;
}

MetricAlgebraSpec assemble_product_spec(const MetricAlgebra& g, const MetricAlgebra& h, const ActionSpec& action,
                                        std::string name) {
  const auto n = g.dim();
  const auto m = h.dim();
  MetricAlgebraSpec spec;
  spec.name = std::move(name);
  spec.structure = StructureConstants(n + m);
  auto& c = spec.structure;
  const auto& cg = g.spec().structure;
  const auto& ch = h.spec().structure;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = cg(i, j, k);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r) c(n + p, n + q, n + r) = ch(p, q, r);
  // [(e_i,0),(0,f_q)] = (0, b(e_i) f_q)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r) c.set_antisymmetric(i, n + q, n + r, action.generators[i](r, q));

  spec.gram = Matrix::Zero(n + m, n + m);
  spec.gram.topLeftCorner(n, n) = g.gram();
  spec.gram.bottomRightCorner(m, m) = h.gram();
  return spec;
}

namespace {

MetricAlgebra checked_product(const MetricAlgebra& g, const MetricAlgebra& h, const ActionSpec& action,
                              const std::string& name) {
  if (auto report = validate_action(g, h, action, g.tolerances()); !report.passed())
    throw ValidationError("semidirect '" + name + "' rejected: " + report.summary());
  return MetricAlgebra(assemble_product_spec(g, h, action, name), g.tolerances());
}

}  // namespace

SemidirectAlgebra::SemidirectAlgebra(MetricAlgebra g, MetricAlgebra h, ActionSpec action, std::string name)
    : g_(std::move(g)),
      h_(std::move(h)),
      action_(std::move(action)),
      name_(std::move(name)),
      product_(checked_product(g_, h_, action_, name_)) {
  const auto n = g_.dim();
  const auto m = h_.dim();

  action_transpose_.reserve(n);
  for (const auto& b : action_.generators) action_transpose_.push_back(h_.metric_adjoint(b));

  // <b(e_i) y1, y2>_h = y1^T (b_i^T G_h) y2; h-coordinates follow from one solve with G_g.
  std::vector<Matrix> pairing;
  pairing.reserve(n);
  for (const auto& b : action_.generators) pairing.push_back(b.transpose() * h_.gram());
  h_tensor_.assign(n, Matrix::Zero(m, m));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      Vector rhs(n);
      for (std::size_t i = 0; i < n; ++i) rhs[i] = pairing[i](p, q);
      const Vector coords = g_.solve_gram(rhs);
      for (std::size_t k = 0; k < n; ++k) h_tensor_[k](p, q) = coords[k];
    }

  isometric_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = std::max(1.0, action_.generators[i].cwiseAbs().maxCoeff());
    if ((action_.generators[i] + action_transpose_[i]).cwiseAbs().maxCoeff() > g_.tolerances().action * scale)
      isometric_ = false;
  }
}

Matrix SemidirectAlgebra::act_matrix(const GElement& x) const {
  g_.check_dim(x);
  Matrix m = Matrix::Zero(dim_h(), dim_h());
  for (std::size_t i = 0; i < dim_g(); ++i)
    if (x[i] != 0.0) m += x[i] * action_.generators[i];
  return m;
}

Matrix SemidirectAlgebra::act_transpose_matrix(const GElement& x) const {
  g_.check_dim(x);
  Matrix m = Matrix::Zero(dim_h(), dim_h());
  for (std::size_t i = 0; i < dim_g(); ++i)
    if (x[i] != 0.0) m += x[i] * action_transpose_[i];
  return m;
}

SemidirectAlgebra::HElement SemidirectAlgebra::act(const GElement& x, const HElement& y) const {
  h_.check_dim(y);
  return act_matrix(x) * y;
}

SemidirectAlgebra::HElement SemidirectAlgebra::act_transpose(const GElement& x, const HElement& y) const {
  h_.check_dim(y);
  return act_transpose_matrix(x) * y;
}

SemidirectAlgebra::GElement SemidirectAlgebra::h_map(const HElement& y1, const HElement& y2) const {
  h_.check_dim(y1);
  h_.check_dim(y2);
  GElement out(dim_g());
  for (std::size_t k = 0; k < dim_g(); ++k) out[k] = y1.dot(h_tensor_[k] * y2);
  return out;
}

SemidirectAlgebra::Element SemidirectAlgebra::product_ad_transpose(const Element& a, const Element& b) const {
  return {g_.ad_transpose(a.first, b.first) - h_map(a.second, b.second),
          h_.ad_transpose(a.second, b.second) + act_transpose(a.first, b.second)};
}

Vector SemidirectAlgebra::join(const Element& e) const {
  g_.check_dim(e.first);
  h_.check_dim(e.second);
  Vector v(dim_g() + dim_h());
  v << e.first, e.second;
  return v;
}

SemidirectAlgebra::Element SemidirectAlgebra::split(const Vector& v) const {
  product_.check_dim(v);
  return {v.head(dim_g()), v.tail(dim_h())};
}

AlgebraElement derive_h(const SemidirectAlgebra& sd, const AlgebraElement& y1, const AlgebraElement& y2) {
  const auto& g = sd.g();
  const auto& h = sd.h();
  Vector rhs(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) rhs[i] = h.inner(sd.act(g.basis(i), y1), y2);
  return g.solve_gram(rhs);
}

bool check_isometric(const SemidirectAlgebra& sd) { return sd.is_isometric(); }

double check_h_identity(const SemidirectAlgebra& sd, const AlgebraElement& y1, const AlgebraElement& y2,
                        const AlgebraElement& x1, const AlgebraElement& x2) {
  const auto& g = sd.g();
  const auto& h = sd.h();
  const double lhs = g.inner(sd.h_map(y1, y2), g.bracket(x1, x2));
  const double t1 = h.inner(sd.act_transpose(x1, y2), sd.act(x2, y1));
  const double t2 = h.inner(sd.act_transpose(x2, y2), sd.act(x1, y1));
  return relative_gap(lhs, t1 - t2, std::abs(lhs) + std::abs(t1) + std::abs(t2));
}

double check_derivation_identity(const SemidirectAlgebra& sd, const AlgebraElement& x, const AlgebraElement& y1,
                                 const AlgebraElement& y2, const AlgebraElement& y3) {
  const auto& h = sd.h();
  const double lhs = h.inner(h.bracket(y1, y2), sd.act_transpose(x, y3));
  const double t1 = h.inner(sd.act(x, y2), h.ad_transpose(y1, y3));
  const double t2 = h.inner(sd.act(x, y1), h.ad_transpose(y2, y3));
  return relative_gap(lhs, t1 - t2, std::abs(lhs) + std::abs(t1) + std::abs(t2));
}

}  // namespace liecurv
