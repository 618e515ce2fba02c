#pragma once

#include <utility>
#include <vector>

#include "liecurv/backend.hpp"
#include "liecurv/errors.hpp"
#include "liecurv/rng.hpp"
#include "liecurv/trig.hpp"

namespace liecurv::torus {

/// Transpose of ad(X) for divergence-free fields: P(nabla_X Y + (nabla X)^T Y).
TrigVectorField ad_transpose_vol(const TrigVectorField& x, const TrigVectorField& y);
/// Transpose of ad(X) on all vector fields: nabla_X Y + (div X) Y + (nabla X)^T Y.
TrigVectorField ad_transpose_full(const TrigVectorField& x, const TrigVectorField& y);
/// Algebra bracket of the right-invariant convention: minus the Jacobi-Lie bracket.
inline TrigVectorField algebra_bracket(const TrigVectorField& x, const TrigVectorField& y) {
  return -lie_bracket(x, y);
}

/// Divergence-free fields with the L2 metric (Lie algebra of volume-preserving diffeomorphisms).
class VolumeFieldBackend {
 public:
  using Element = TrigVectorField;

  Element zero() const { return {}; }
  Element bracket(const Element& x, const Element& y) const { return algebra_bracket(x, y); }
  double inner(const Element& x, const Element& y) const { return torus::inner(x, y); }
  Element ad_transpose(const Element& x, const Element& y) const { return ad_transpose_vol(x, y); }
};

/// All vector fields with the L2 metric.
class FullFieldBackend {
 public:
  using Element = TrigVectorField;

  Element zero() const { return {}; }
  Element bracket(const Element& x, const Element& y) const { return algebra_bracket(x, y); }
  double inner(const Element& x, const Element& y) const { return torus::inner(x, y); }
  Element ad_transpose(const Element& x, const Element& y) const { return ad_transpose_full(x, y); }
};

/// Functions with the L2 metric, as an abelian algebra.
class FunctionBackend {
 public:
  using Element = TrigFunction;

  Element zero() const { return {}; }
  Element bracket(const Element&, const Element&) const { return {}; }
  double inner(const Element& f, const Element& g) const { return torus::inner(f, g); }
  Element ad_transpose(const Element&, const Element&) const { return {}; }
};

/// Divergence-free fields x| functions under b(X)f = -X(f): the passive scalar system.
/// Isometric: b(X)^T = -b(X), and h(f1, f2) = -P(f2 grad f1).
class PassiveScalarBackend {
 public:
  using GElement = TrigVectorField;
  using HElement = TrigFunction;

  const VolumeFieldBackend& g() const { return g_; }
  const FunctionBackend& h() const { return h_; }
  HElement act(const GElement& x, const HElement& f) const { return -apply(x, f); }
  HElement act_transpose(const GElement& x, const HElement& f) const { return apply(x, f); }
  GElement h_map(const HElement& f1, const HElement& f2) const { return -leray_project(scale(f2, gradient(f1))); }
  bool is_isometric() const { return true; }

 private:
  VolumeFieldBackend g_;
  FunctionBackend h_;
};

/// All vector fields x| functions under b(X)f = -X(f), with b(X)^T f = X(f) + f div X and
/// h(f1, f2) = -f2 grad f1.
class CompressibleScalarBackend {
 public:
  using GElement = TrigVectorField;
  using HElement = TrigFunction;

  const FullFieldBackend& g() const { return g_; }
  const FunctionBackend& h() const { return h_; }
  HElement act(const GElement& x, const HElement& f) const { return -apply(x, f); }
  HElement act_transpose(const GElement& x, const HElement& f) const {
    return apply(x, f) + multiply(f, divergence(x));
  }
  GElement h_map(const HElement& f1, const HElement& f2) const { return -scale(f2, gradient(f1)); }
  bool is_isometric() const { return false; }

 private:
  FullFieldBackend g_;
  FunctionBackend h_;
};

const VolumeFieldBackend& volume_backend();

/// Magnetic extension of the divergence-free fields (ideal MHD), B-fields as A-preimages.
using MhdBackend = MagneticExtension<VolumeFieldBackend>;
inline MhdBackend mhd_backend() { return MhdBackend(volume_backend()); }
inline PassiveScalarBackend passive_scalar_backend() { return {}; }
inline CompressibleScalarBackend compressible_scalar_backend() { return {}; }

/// Curvature sign of the mixed plane (X,0),(0,A(Y)) in ideal MHD:
///   <P nabla_X X, P nabla_Y Y> - 1/4|P(nabla_Y X + (nabla X)^T Y)|^2 + 1/2|[X,Y]|^2
///   - 1/2|P(nabla_X Y + (nabla X)^T Y)|^2
double mhd_mixed_plane(const TrigVectorField& x, const TrigVectorField& y);
/// Curvature sign of the plane (0,A(Y1)),(0,A(Y2)):
///   1/4|P(nabla_Y1 Y2 + nabla_Y2 Y1)|^2 - <P nabla_Y1 Y1, P nabla_Y2 Y2>
double mhd_pure_magnetic_plane(const TrigVectorField& y1, const TrigVectorField& y2);
/// Curvature numerator of the volume-preserving group over the flat torus:
///   <Q nabla_X X, Q nabla_Y Y> - |Q nabla_X Y|^2,  Q = 1 - P.
double arnold_flat_curvature(const TrigVectorField& x, const TrigVectorField& y);

/// Incompressible Euler right-hand side -P(nabla_u u).
TrigVectorField euler_rhs(const TrigVectorField& u);
/// u_t = -P(nabla_u u), f_t = -u(f)
std::pair<TrigVectorField, TrigFunction> passive_scalar_rhs(const TrigVectorField& u, const TrigFunction& f);
/// u_t = -nabla_u u - (div u) u - 1/2 grad |u|^2 - f grad f,  f_t = -u(f) - f div u
std::pair<TrigVectorField, TrigFunction> compressible_rhs(const TrigVectorField& u, const TrigFunction& f);
/// u_t = P(-nabla_u u + nabla_B B),  B_t = -[u, B] with the Jacobi-Lie bracket.
std::pair<TrigVectorField, TrigVectorField> mhd_rhs(const TrigVectorField& u, const TrigVectorField& b);

/// Canonical modes with max(|k1|,|k2|) <= band (constant included).
std::vector<Mode> canonical_modes(int band);
/// Standard-normal coefficients on every canonical mode up to `band`.
TrigFunction random_function(Rng& rng, int band);
/// Skew gradient of a random stream function plus a random constant field.
TrigVectorField random_divergence_free(Rng& rng, int band);
/// Random field with independent random components (not divergence free in general).
TrigVectorField random_field(Rng& rng, int band);

}  // namespace liecurv::torus
