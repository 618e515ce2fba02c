#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "liecurv/algebra.hpp"
#include "liecurv/backend.hpp"
#include "liecurv/errors.hpp"

namespace liecurv {

struct CurvatureTerm {
  std::string label;
  double value;
};

/// Per-term evaluation of <R(X,Y)Y, X> together with the sectional curvature of the plane.
struct CurvatureBreakdown {
  double numerator = 0.0;
  /// |X|^2 |Y|^2 - <X,Y>^2
  double denominator = 0.0;
  /// numerator / denominator, or NaN when the denominator vanishes.
  double sectional = 0.0;
  std::vector<CurvatureTerm> terms;

  void add(std::string label, double value) { terms.push_back({std::move(label), value}); }
  void finish(double gram2);
};

inline void CurvatureBreakdown::finish(double gram2) {
  numerator = 0.0;
  for (const auto& t : terms) numerator += t.value;
  denominator = gram2;
  sectional = gram2 > 0.0 ? numerator / gram2 : std::nan("");
}

template <class E>
struct Plane {
  E x;
  E y;
};

constexpr double kDegeneracyTol = 1e-12;

template <MetricAlgebraBackend B>
double plane_gram(const B& b, const typename B::Element& x, const typename B::Element& y) {
  const double xy = b.inner(x, y);
  return b.inner(x, x) * b.inner(y, y) - xy * xy;
}

template <MetricAlgebraBackend B>
bool is_degenerate(const B& b, const typename B::Element& x, const typename B::Element& y,
                   double tol = kDegeneracyTol) {
  return !(plane_gram(b, x, y) > tol * b.inner(x, x) * b.inner(y, y));
}

/// The five-term right-trivialized expression for <R(X,Y)Y, X>:
///   1/4|ad(X)^T Y + ad(Y)^T X|^2 - 3/4|ad(X)Y|^2 - <ad(X)^T X, ad(Y)^T Y>
///   - 1/2<ad(X)^T Y, ad(X)Y> - 1/2<ad(Y)^T X, ad(Y)X>
template <MetricAlgebraBackend B>
CurvatureBreakdown curvature_numerator_generic(const B& b, const typename B::Element& x,
                                               const typename B::Element& y) {
  using E = typename B::Element;
  const E adt_xy = b.ad_transpose(x, y);
  const E adt_yx = b.ad_transpose(y, x);
  const E adt_xx = b.ad_transpose(x, x);
  const E adt_yy = b.ad_transpose(y, y);
  const E xy = b.bracket(x, y);
  const E yx = b.bracket(y, x);
  const E sym = adt_xy + adt_yx;

  CurvatureBreakdown out;
  out.add("sym_transpose_sq", 0.25 * b.inner(sym, sym));
  out.add("bracket_sq", -0.75 * b.inner(xy, xy));
  out.add("self_transpose", -b.inner(adt_xx, adt_yy));
  out.add("transpose_bracket_xy", -0.5 * b.inner(adt_xy, xy));
  out.add("transpose_bracket_yx", -0.5 * b.inner(adt_yx, yx));
  out.finish(plane_gram(b, x, y));
  return out;
}

/// Sectional curvature of the plane spanned by x and y. Throws DegeneratePlane when
/// |X|^2|Y|^2 - <X,Y>^2 <= tol * |X|^2 |Y|^2.
template <MetricAlgebraBackend B>
double sectional(const B& b, const typename B::Element& x, const typename B::Element& y,
                 double tol = kDegeneracyTol) {
  if (is_degenerate(b, x, y, tol)) throw DegeneratePlane("plane spanned by x and y is degenerate");
  return curvature_numerator_generic(b, x, y).sectional;
}

template <MetricAlgebraBackend B>
double sectional(const B& b, const Plane<typename B::Element>& p, double tol = kDegeneracyTol) {
  return sectional(b, p.x, p.y, tol);
}

/// Expansion of <R((X1,Y1),(X2,Y2))(X2,Y2),(X1,Y1)> on a semidirect product in terms of the
/// factor curvatures, the h-map, b, b^T and the transposes of ad on each factor. One labeled
/// term per displayed summand; mirrored pairs on a line are reported separately.
template <SemidirectBackend S>
CurvatureBreakdown curvature_numerator_semidirect(const S& sd, const typename S::GElement& x1,
                                                  const typename S::HElement& y1, const typename S::GElement& x2,
                                                  const typename S::HElement& y2) {
  using G = typename S::GElement;
  using H = typename S::HElement;
  const auto& g = sd.g();
  const auto& h = sd.h();

  const G h12 = sd.h_map(y1, y2);
  const G h21 = sd.h_map(y2, y1);
  const G h11 = sd.h_map(y1, y1);
  const G h22 = sd.h_map(y2, y2);
  const G hsym = h12 + h21;

  const G gt12 = g.ad_transpose(x1, x2);
  const G gt21 = g.ad_transpose(x2, x1);
  const G gt11 = g.ad_transpose(x1, x1);
  const G gt22 = g.ad_transpose(x2, x2);

  const H b1y1 = sd.act(x1, y1);
  const H b1y2 = sd.act(x1, y2);
  const H b2y1 = sd.act(x2, y1);
  const H b2y2 = sd.act(x2, y2);
  const H bt1y1 = sd.act_transpose(x1, y1);
  const H bt1y2 = sd.act_transpose(x1, y2);
  const H bt2y1 = sd.act_transpose(x2, y1);
  const H bt2y2 = sd.act_transpose(x2, y2);

  const H ht11 = h.ad_transpose(y1, y1);
  const H ht22 = h.ad_transpose(y2, y2);
  const H ht12 = h.ad_transpose(y1, y2);
  const H ht21 = h.ad_transpose(y2, y1);
  const H hy12 = h.bracket(y1, y2);

  const H btsym = bt1y2 + bt2y1;
  const H bdiff = b1y2 - b2y1;

  CurvatureBreakdown out;
  out.add("R_G", curvature_numerator_generic(g, x1, x2).numerator);
  out.add("R_H", curvature_numerator_generic(h, y1, y2).numerator);
  out.add("h_sym_sq", 0.25 * g.inner(hsym, hsym));
  out.add("h11_h22", -g.inner(h11, h22));
  out.add("h_sym_gT_sym", -0.5 * g.inner(hsym, gt12 + gt21));
  out.add("h11_gT22", g.inner(h11, gt22));
  out.add("h22_gT11", g.inner(h22, gt11));
  out.add("bT_sym_sq", 0.25 * h.inner(btsym, btsym));
  out.add("b_diff_sq", -0.75 * h.inner(bdiff, bdiff));
  out.add("bT11_bT22", -h.inner(bt1y1, bt2y2));
  out.add("bT11_b22", -0.5 * h.inner(bt1y1, b2y2));
  out.add("bT22_b11", -0.5 * h.inner(bt2y2, b1y1));
  out.add("bT12_b21", h.inner(bt1y2, b2y1));
  out.add("bT21_b12", h.inner(bt2y1, b1y2));
  out.add("bT12_b12", -0.5 * h.inner(bt1y2, b1y2));
  out.add("bT21_b21", -0.5 * h.inner(bt2y1, b2y1));
  out.add("hT11_bT22", -h.inner(ht11, bt2y2));
  out.add("hT22_bT11", -h.inner(ht22, bt1y1));
  out.add("hT12_mix", 0.5 * h.inner(ht12, btsym - b1y2 + b2y1));
  out.add("hT21_mix", 0.5 * h.inner(ht21, btsym - b2y1 + b1y2));
  out.add("hbracket_mix", -0.5 * h.inner(hy12, bt1y2 - bt2y1 + 3.0 * b1y2 - 3.0 * b2y1));

  const double xx = g.inner(x1, x1) + h.inner(y1, y1);
  const double yy = g.inner(x2, x2) + h.inner(y2, y2);
  const double xy = g.inner(x1, x2) + h.inner(y1, y2);
  out.finish(xx * yy - xy * xy);
  return out;
}

template <SemidirectBackend S>
CurvatureBreakdown curvature_numerator_semidirect(const S& sd, const Pair<typename S::GElement, typename S::HElement>& a,
                                                  const Pair<typename S::GElement, typename S::HElement>& b) {
  return curvature_numerator_semidirect(sd, a.first, a.second, b.first, b.second);
}

/// Plane spanned by (X1,0) and (X2,0): the curvature numerator of g.
template <SemidirectBackend S>
double special_plane_gg(const S& sd, const typename S::GElement& x1, const typename S::GElement& x2) {
  return curvature_numerator_generic(sd.g(), x1, x2).numerator;
}

/// Plane spanned by (X,0) and (0,Y):
///   <h(Y,Y), ad(X)^T X> - 1/4|(b(X)+b(X)^T)Y|^2 + 1/2|b(X)^T Y|^2 - 1/2|b(X)Y|^2
template <SemidirectBackend S>
double special_plane_gh(const S& sd, const typename S::GElement& x, const typename S::HElement& y) {
  using H = typename S::HElement;
  const auto& g = sd.g();
  const auto& h = sd.h();
  const H by = sd.act(x, y);
  const H bty = sd.act_transpose(x, y);
  const H s = by + bty;
  return g.inner(sd.h_map(y, y), g.ad_transpose(x, x)) - 0.25 * h.inner(s, s) + 0.5 * h.inner(bty, bty) -
         0.5 * h.inner(by, by);
}

/// Plane spanned by (0,Y1) and (0,Y2):
///   <R^H(Y1,Y2)Y2,Y1> + 1/4|h(Y1,Y2)+h(Y2,Y1)|^2 - <h(Y1,Y1),h(Y2,Y2)>
template <SemidirectBackend S>
double special_plane_hh(const S& sd, const typename S::HElement& y1, const typename S::HElement& y2) {
  using G = typename S::GElement;
  const auto& g = sd.g();
  const G s = sd.h_map(y1, y2) + sd.h_map(y2, y1);
  return curvature_numerator_generic(sd.h(), y1, y2).numerator + 0.25 * g.inner(s, s) -
         g.inner(sd.h_map(y1, y1), sd.h_map(y2, y2));
}

/// R^G(X1,X2,X2,X1) + R^H(Y1,Y2,Y2,Y1); valid only when the action is by isometries.
template <SemidirectBackend S>
double isometric_sum(const S& sd, const typename S::GElement& x1, const typename S::HElement& y1,
                     const typename S::GElement& x2, const typename S::HElement& y2) {
  if (!sd.is_isometric()) throw NotIsometric("isometric_sum requires a skew-adjoint action");
  return curvature_numerator_generic(sd.g(), x1, x2).numerator +
         curvature_numerator_generic(sd.h(), y1, y2).numerator;
}

/// Full expansion on a magnetic extension g x| g*_reg written with A-preimages Y1, Y2 and only
/// the operations of g. Must agree with the semidirect expansion on MagneticExtension<B>.
template <MetricAlgebraBackend B>
CurvatureBreakdown curvature_numerator_magnetic(const B& g, const typename B::Element& x1,
                                                const typename B::Element& y1, const typename B::Element& x2,
                                                const typename B::Element& y2) {
  using E = typename B::Element;
  const E yt12 = g.ad_transpose(y1, y2);
  const E yt21 = g.ad_transpose(y2, y1);
  const E yt11 = g.ad_transpose(y1, y1);
  const E yt22 = g.ad_transpose(y2, y2);
  const E xt12 = g.ad_transpose(x1, x2);
  const E xt21 = g.ad_transpose(x2, x1);
  const E xt11 = g.ad_transpose(x1, x1);
  const E xt22 = g.ad_transpose(x2, x2);
  const E a11 = g.bracket(x1, y1);
  const E a12 = g.bracket(x1, y2);
  const E a21 = g.bracket(x2, y1);
  const E a22 = g.bracket(x2, y2);
  const E t11 = g.ad_transpose(x1, y1);
  const E t12 = g.ad_transpose(x1, y2);
  const E t21 = g.ad_transpose(x2, y1);
  const E t22 = g.ad_transpose(x2, y2);
  const E ysym = yt12 + yt21;
  const E asym = a12 + a21;
  const E tdiff = t12 - t21;

  CurvatureBreakdown out;
  out.add("R_G", curvature_numerator_generic(g, x1, x2).numerator);
  out.add("yT_sym_sq", 0.25 * g.inner(ysym, ysym));
  out.add("ad11_ad22", -g.inner(a11, a22));
  out.add("yT11_yT22", -g.inner(yt11, yt22));
  // Coefficient -1/2: h-map substitution into the semidirect expansion. A +1/2 here does not
  // match the product-algebra curvature.
  out.add("yT_sym_xT_sym", -0.5 * g.inner(ysym, xt12 + xt21));
  out.add("yT11_xT22", g.inner(yt11, xt22));
  out.add("yT22_xT11", g.inner(yt22, xt11));
  out.add("ad_sym_sq", 0.25 * g.inner(asym, asym));
  out.add("adT_diff_sq", -0.75 * g.inner(tdiff, tdiff));
  out.add("ad11_adT22", -0.5 * g.inner(a11, t22));
  out.add("ad22_adT11", -0.5 * g.inner(a22, t11));
  out.add("ad12_adT21", g.inner(a12, t21));
  out.add("ad21_adT12", g.inner(a21, t12));
  out.add("ad12_adT12", -0.5 * g.inner(a12, t12));
  out.add("ad21_adT21", -0.5 * g.inner(a21, t21));

  const double xx = g.inner(x1, x1) + g.inner(y1, y1);
  const double yy = g.inner(x2, x2) + g.inner(y2, y2);
  const double xy = g.inner(x1, x2) + g.inner(y1, y2);
  out.finish(xx * yy - xy * xy);
  return out;
}

/// Levi-Civita connection on constant right-trivialized sections:
///   1/2 ad(X)^T Y + 1/2 ad(Y)^T X - 1/2 ad(X)Y
template <MetricAlgebraBackend B>
typename B::Element covariant_derivative(const B& b, const typename B::Element& x, const typename B::Element& y) {
  return 0.5 * b.ad_transpose(x, y) + 0.5 * b.ad_transpose(y, x) - 0.5 * b.bracket(x, y);
}

/// Brute-force <R(X,Y)Y,X> from an explicit connection tensor built on the structure constants
/// with an independent dense inverse of the Gram matrix. The curvature operator is composed as
///   R(X,Y)Z = C(X, C(Y,Z)) - C(Y, C(X,Z)) - C([X,Y]_fields, Z)
/// with the right-invariant field bracket [X,Y]_fields = -[X,Y].
class ConnectionOracle {
 public:
  explicit ConnectionOracle(const MetricAlgebraSpec& spec);

  /// Sign applied to the algebra bracket to obtain the bracket of right-invariant fields.
  static constexpr double kFieldBracketSign = -1.0;
  static constexpr const char* kConventionNote =
      "R(X,Y)Z = C(X,C(Y,Z)) - C(Y,C(X,Z)) - C([X,Y]_fields,Z), [X,Y]_fields = -[X,Y]";

  std::size_t dim() const { return dim_; }
  Vector connection(const Vector& x, const Vector& y) const;
  Vector curvature(const Vector& x, const Vector& y, const Vector& z) const;
  double numerator(const Vector& x, const Vector& y) const;

 private:
  Vector field_bracket(const Vector& x, const Vector& y) const;

  std::size_t dim_;
  Matrix gram_;
  std::vector<double> structure_;
  // gamma_[(i*dim + j)] = C(e_i, e_j)
  std::vector<Vector> gamma_;
};

double oracle_curvature(const MetricAlgebraSpec& spec, const Vector& x, const Vector& y);

}  // namespace liecurv
