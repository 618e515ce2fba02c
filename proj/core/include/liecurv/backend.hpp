#pragma once

#include <concepts>
#include <type_traits>
#include <utility>

namespace liecurv {

/// Operation set of a Lie algebra with an inner product for which ad(x)^T exists.
///
/// Implemented by the dense finite-dimensional MetricAlgebra and by the trigonometric
/// torus backends. Elements must form a real vector space under +, - and scalar *.
template <class B>
concept MetricAlgebraBackend = requires(const B& b, const typename B::Element& x, double s) {
  typename B::Element;
  { b.zero() } -> std::convertible_to<typename B::Element>;
  { b.bracket(x, x) } -> std::convertible_to<typename B::Element>;
  { b.inner(x, x) } -> std::convertible_to<double>;
  { b.ad_transpose(x, x) } -> std::convertible_to<typename B::Element>;
  { x + x } -> std::convertible_to<typename B::Element>;
  { x - x } -> std::convertible_to<typename B::Element>;
  { s * x } -> std::convertible_to<typename B::Element>;
};

/// The semidirect role: a left factor g acting on a right factor h by derivations b(X),
/// together with b(X)^T and the bilinear map h(Y1, Y2) defined by <b(X)Y1, Y2> = <h(Y1,Y2), X>.
template <class S>
concept SemidirectBackend = requires(const S& s, const typename S::GElement& x, const typename S::HElement& y) {
  requires MetricAlgebraBackend<std::remove_cvref_t<decltype(s.g())>>;
  requires MetricAlgebraBackend<std::remove_cvref_t<decltype(s.h())>>;
  { s.act(x, y) } -> std::convertible_to<typename S::HElement>;
  { s.act_transpose(x, y) } -> std::convertible_to<typename S::HElement>;
  { s.h_map(y, y) } -> std::convertible_to<typename S::GElement>;
  { s.is_isometric() } -> std::convertible_to<bool>;
};

/// An element (X, Y) of a semidirect product g x h.
template <class G, class H>
struct Pair {
  G first;
  H second;

  friend Pair operator+(const Pair& a, const Pair& b) { return {a.first + b.first, a.second + b.second}; }
  friend Pair operator-(const Pair& a, const Pair& b) { return {a.first - b.first, a.second - b.second}; }
  friend Pair operator*(double s, const Pair& a) { return {s * a.first, s * a.second}; }
};

/// The product algebra g x| h assembled from a semidirect backend through the closed forms
/// for the product bracket, the block inner product and the transpose of ad(X, Y).
template <SemidirectBackend S>
class SemidirectProduct {
 public:
  using GElement = typename S::GElement;
  using HElement = typename S::HElement;
  using Element = Pair<GElement, HElement>;

  explicit SemidirectProduct(const S& sd) : sd_(&sd) {}

  Element zero() const { return {sd_->g().zero(), sd_->h().zero()}; }

  Element bracket(const Element& a, const Element& b) const {
    return {sd_->g().bracket(a.first, b.first),
            sd_->h().bracket(a.second, b.second) + sd_->act(a.first, b.second) - sd_->act(b.first, a.second)};
  }

  double inner(const Element& a, const Element& b) const {
    return sd_->g().inner(a.first, b.first) + sd_->h().inner(a.second, b.second);
  }

  Element ad_transpose(const Element& a, const Element& b) const {
    return {sd_->g().ad_transpose(a.first, b.first) - sd_->h_map(a.second, b.second),
            sd_->h().ad_transpose(a.second, b.second) + sd_->act_transpose(a.first, b.second)};
  }

 private:
  const S* sd_;
};

/// Abelian algebra on the element space of another backend, sharing its inner product.
template <MetricAlgebraBackend B>
class AbelianCopy {
 public:
  using Element = typename B::Element;

  explicit AbelianCopy(const B& base) : base_(&base) {}

  Element zero() const { return base_->zero(); }
  Element bracket(const Element&, const Element&) const { return base_->zero(); }
  double inner(const Element& a, const Element& b) const { return base_->inner(a, b); }
  Element ad_transpose(const Element&, const Element&) const { return base_->zero(); }

 private:
  const B* base_;
};

/// Magnetic extension g x| g*_reg, with dual elements represented by their preimages under
/// the inertia operator A. On representatives:
///   b(X)Y = -ad(X)^T Y,  b(X)^T Y = -ad(X)Y,  h(Y1, Y2) = ad(Y2)^T Y1.
template <MetricAlgebraBackend B>
class MagneticExtension {
 public:
  using GElement = typename B::Element;
  using HElement = typename B::Element;

  /// `isometric` must be true exactly when ad(X) is skew-adjoint for every X.
  explicit MagneticExtension(const B& g, bool isometric = false) : g_(&g), dual_(g), isometric_(isometric) {}

  const B& g() const { return *g_; }
  const AbelianCopy<B>& h() const { return dual_; }

  HElement act(const GElement& x, const HElement& y) const { return -1.0 * g_->ad_transpose(x, y); }
  HElement act_transpose(const GElement& x, const HElement& y) const { return -1.0 * g_->bracket(x, y); }
  GElement h_map(const HElement& y1, const HElement& y2) const { return g_->ad_transpose(y2, y1); }
  bool is_isometric() const { return isometric_; }

 private:
  const B* g_;
  AbelianCopy<B> dual_;
  bool isometric_;
};

}  // namespace liecurv
