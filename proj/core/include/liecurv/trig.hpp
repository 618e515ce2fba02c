#pragma once

#include <compare>
#include <map>
#include <string>

namespace liecurv::torus {

enum class Parity : int { Cos = 0, Sin = 1 };

/// Mode key (k1, k2, parity) in canonical form: k lexicographically positive, or k = (0,0)
/// with cosine parity.
struct Mode {
  int k1 = 0;
  int k2 = 0;
  Parity parity = Parity::Cos;

  auto operator<=>(const Mode&) const = default;
  int radius() const;  // max(|k1|, |k2|)
};

/// Squared L2 norm of a canonical mode over [0, 2pi)^2: (2pi)^2 for the constant, 2pi^2 otherwise.
double mode_norm2(const Mode& m);

/// Finite trigonometric sum  sum c * cos(k.x)  +  sum c * sin(k.x)  over canonical modes.
class TrigFunction {
 public:
  using Terms = std::map<Mode, double>;

  TrigFunction() = default;
  static TrigFunction constant(double c);
  static TrigFunction cos_mode(int k1, int k2, double c = 1.0);
  static TrigFunction sin_mode(int k1, int k2, double c = 1.0);

  /// Adds c * cos(k.x) or c * sin(k.x) for any integer k, canonicalizing the key.
  void add_term(int k1, int k2, Parity parity, double c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  double coefficient(const Mode& m) const;
  int radius() const;
  double max_abs() const;

  /// Partial derivative along axis 0 (x1) or 1 (x2).
  TrigFunction derivative(int axis) const;
  double evaluate(double x1, double x2) const;
  /// Drops every mode with max(|k1|,|k2|) > cap.
  TrigFunction truncated(int cap) const;

  TrigFunction& operator+=(const TrigFunction& o);
  TrigFunction& operator-=(const TrigFunction& o);
  TrigFunction& operator*=(double s);

  friend TrigFunction operator+(TrigFunction a, const TrigFunction& b) { return a += b; }
  friend TrigFunction operator-(TrigFunction a, const TrigFunction& b) { return a -= b; }
  friend TrigFunction operator*(double s, TrigFunction a) { return a *= s; }
  friend TrigFunction operator-(TrigFunction a) { return a *= -1.0; }

 private:
  Terms terms_;
};

/// Exact product via product-to-sum identities.
TrigFunction multiply(const TrigFunction& f, const TrigFunction& g);
/// L2 inner product over [0, 2pi)^2 with volume form dx1 dx2.
double inner(const TrigFunction& f, const TrigFunction& g);

/// Vector field with components in the flat coordinate frame.
struct TrigVectorField {
  TrigFunction c1;
  TrigFunction c2;

  const TrigFunction& operator[](int i) const { return i == 0 ? c1 : c2; }
  TrigFunction& operator[](int i) { return i == 0 ? c1 : c2; }

  bool is_zero() const { return c1.is_zero() && c2.is_zero(); }
  int radius() const;
  double max_abs() const;
  TrigVectorField truncated(int cap) const { return {c1.truncated(cap), c2.truncated(cap)}; }

  TrigVectorField& operator+=(const TrigVectorField& o) {
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }
  TrigVectorField& operator-=(const TrigVectorField& o) {
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
  }
  TrigVectorField& operator*=(double s) {
    c1 *= s;
    c2 *= s;
    return *this;
  }
  friend TrigVectorField operator+(TrigVectorField a, const TrigVectorField& b) { return a += b; }
  friend TrigVectorField operator-(TrigVectorField a, const TrigVectorField& b) { return a -= b; }
  friend TrigVectorField operator*(double s, TrigVectorField a) { return a *= s; }
  friend TrigVectorField operator-(TrigVectorField a) { return a *= -1.0; }
};

double inner(const TrigVectorField& x, const TrigVectorField& y);
TrigFunction divergence(const TrigVectorField& x);
TrigVectorField gradient(const TrigFunction& f);
/// Skew gradient (d2 psi, -d1 psi) of a stream function; always divergence free.
TrigVectorField skew_gradient(const TrigFunction& psi);
/// f * X
TrigVectorField scale(const TrigFunction& f, const TrigVectorField& x);
/// X(f) = sum_j X_j d_j f
TrigFunction apply(const TrigVectorField& x, const TrigFunction& f);
/// (nabla_X Y)_i = sum_j X_j d_j Y_i
TrigVectorField directional_derivative(const TrigVectorField& x, const TrigVectorField& y);
/// ((nabla X)^T Y)_i = sum_j (d_i X_j) Y_j
TrigVectorField jacobian_transpose_apply(const TrigVectorField& x, const TrigVectorField& y);
/// Jacobi-Lie bracket nabla_X Y - nabla_Y X.
TrigVectorField lie_bracket(const TrigVectorField& x, const TrigVectorField& y);
/// Orthogonal projection onto divergence-free fields: per mode, the component along k is removed.
TrigVectorField leray_project(const TrigVectorField& x);
/// X - P X: the gradient part.
TrigVectorField gradient_part(const TrigVectorField& x);
/// Divergence vanishes to `tol` relative to the largest coefficient times the support radius.
bool is_divergence_free(const TrigVectorField& x, double tol = 1e-12);

std::string to_string(Parity p);

}  // namespace liecurv::torus
