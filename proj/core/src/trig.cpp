#include "liecurv/trig.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <utility>

namespace liecurv::torus {

namespace {

constexpr double kPi = std::numbers::pi;

std::pair<int, int> k_of(const Mode& m) { return {m.k1, m.k2}; }

}  // namespace

int Mode::radius() const { return std::max(std::abs(k1), std::abs(k2)); }

double mode_norm2(const Mode& m) {
  if (m.k1 == 0 && m.k2 == 0) return 4.0 * kPi * kPi;
  return 2.0 * kPi * kPi;
}

std::string to_string(Parity p) { return p == Parity::Cos ? "cos" : "sin"; }

TrigFunction TrigFunction::constant(double c) {
  TrigFunction f;
  f.add_term(0, 0, Parity::Cos, c);
  return f;
}

TrigFunction TrigFunction::cos_mode(int k1, int k2, double c) {
  TrigFunction f;
  f.add_term(k1, k2, Parity::Cos, c);
  return f;
}

TrigFunction TrigFunction::sin_mode(int k1, int k2, double c) {
  TrigFunction f;
  f.add_term(k1, k2, Parity::Sin, c);
  return f;
}

void TrigFunction::add_term(int k1, int k2, Parity parity, double c) {
  if (c == 0.0) return;
  if (k1 == 0 && k2 == 0 && parity == Parity::Sin) return;
  if (k1 < 0 || (k1 == 0 && k2 < 0)) {
    k1 = -k1;
    k2 = -k2;
    if (parity == Parity::Sin) c = -c;
  }
  const Mode key{k1, k2, parity};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double TrigFunction::coefficient(const Mode& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

int TrigFunction::radius() const {
  int r = 0;
  for (const auto& [m, c] : terms_) r = std::max(r, m.radius());
  return r;
}

double TrigFunction::max_abs() const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

TrigFunction TrigFunction::derivative(int axis) const {
  TrigFunction out;
  for (const auto& [m, c] : terms_) {
    const int k = axis == 0 ? m.k1 : m.k2;
    if (k == 0) continue;
    if (m.parity == Parity::Cos)
      out.add_term(m.k1, m.k2, Parity::Sin, -k * c);
    else
      out.add_term(m.k1, m.k2, Parity::Cos, k * c);
  }
  return out;
}

double TrigFunction::evaluate(double x1, double x2) const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    const double phase = m.k1 * x1 + m.k2 * x2;
    s += c * (m.parity == Parity::Cos ? std::cos(phase) : std::sin(phase));
  }
  return s;
}

TrigFunction TrigFunction::truncated(int cap) const {
  TrigFunction out;
  for (const auto& [m, c] : terms_)
    if (m.radius() <= cap) out.terms_.emplace(m, c);
  return out;
}

TrigFunction& TrigFunction::operator+=(const TrigFunction& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.k1, m.k2, m.parity, c);
  return *this;
}

TrigFunction& TrigFunction::operator-=(const TrigFunction& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.k1, m.k2, m.parity, -c);
  return *this;
}

TrigFunction& TrigFunction::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

TrigFunction multiply(const TrigFunction& f, const TrigFunction& g) {
  TrigFunction out;
  for (const auto& [ma, ca] : f.terms()) {
    const auto [a1, a2] = k_of(ma);
    for (const auto& [mb, cb] : g.terms()) {
      const auto [b1, b2] = k_of(mb);
      const double w = 0.5 * ca * cb;
      const bool sa = ma.parity == Parity::Sin;
      const bool sb = mb.parity == Parity::Sin;
      if (!sa && !sb) {
        out.add_term(a1 - b1, a2 - b2, Parity::Cos, w);
        out.add_term(a1 + b1, a2 + b2, Parity::Cos, w);
      } else if (sa && sb) {
        out.add_term(a1 - b1, a2 - b2, Parity::Cos, w);
        out.add_term(a1 + b1, a2 + b2, Parity::Cos, -w);
      } else if (sa) {
        out.add_term(a1 + b1, a2 + b2, Parity::Sin, w);
        out.add_term(a1 - b1, a2 - b2, Parity::Sin, w);
      } else {
        out.add_term(a1 + b1, a2 + b2, Parity::Sin, w);
        out.add_term(a1 - b1, a2 - b2, Parity::Sin, -w);
      }
    }
  }
  return out;
}

double inner(const TrigFunction& f, const TrigFunction& g) {
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  double s = 0.0;
  for (const auto& [m, c] : small.terms()) {
    const double d = large.coefficient(m);
    if (d != 0.0) s += c * d * mode_norm2(m);
  }
  return s;
}

int TrigVectorField::radius() const { return std::max(c1.radius(), c2.radius()); }
double TrigVectorField::max_abs() const { return std::max(c1.max_abs(), c2.max_abs()); }

double inner(const TrigVectorField& x, const TrigVectorField& y) { return inner(x.c1, y.c1) + inner(x.c2, y.c2); }

TrigFunction divergence(const TrigVectorField& x) { return x.c1.derivative(0) + x.c2.derivative(1); }

TrigVectorField gradient(const TrigFunction& f) { return {f.derivative(0), f.derivative(1)}; }

TrigVectorField skew_gradient(const TrigFunction& psi) { return {psi.derivative(1), -psi.derivative(0)}; }

TrigVectorField scale(const TrigFunction& f, const TrigVectorField& x) {
  return {multiply(f, x.c1), multiply(f, x.c2)};
}

TrigFunction apply(const TrigVectorField& x, const TrigFunction& f) {
  return multiply(x.c1, f.derivative(0)) + multiply(x.c2, f.derivative(1));
}

TrigVectorField directional_derivative(const TrigVectorField& x, const TrigVectorField& y) {
  return {apply(x, y.c1), apply(x, y.c2)};
}

TrigVectorField jacobian_transpose_apply(const TrigVectorField& x, const TrigVectorField& y) {
  TrigVectorField out;
  for (int i = 0; i < 2; ++i) out[i] = multiply(x.c1.derivative(i), y.c1) + multiply(x.c2.derivative(i), y.c2);
  return out;
}

TrigVectorField lie_bracket(const TrigVectorField& x, const TrigVectorField& y) {
  return directional_derivative(x, y) - directional_derivative(y, x);
}

namespace {

/// Splits x into its divergence-free and gradient parts, mode by mode.
std::pair<TrigVectorField, TrigVectorField> helmholtz(const TrigVectorField& x) {
  std::set<Mode> keys;
  for (const auto& [m, c] : x.c1.terms()) keys.insert(m);
  for (const auto& [m, c] : x.c2.terms()) keys.insert(m);

  TrigVectorField solenoidal;
  TrigVectorField grad;
  for (const auto& m : keys) {
    const double a1 = x.c1.coefficient(m);
    const double a2 = x.c2.coefficient(m);
    if (m.k1 == 0 && m.k2 == 0) {
      solenoidal.c1.add_term(0, 0, m.parity, a1);
      solenoidal.c2.add_term(0, 0, m.parity, a2);
      continue;
    }
    const double kk = double(m.k1) * m.k1 + double(m.k2) * m.k2;
    const double along = (a1 * m.k1 + a2 * m.k2) / kk;
    const double g1 = along * m.k1;
    const double g2 = along * m.k2;
    grad.c1.add_term(m.k1, m.k2, m.parity, g1);
    grad.c2.add_term(m.k1, m.k2, m.parity, g2);
    // The transverse part is computed from the unit normal to k directly, not as a - g.
    const double across = (a1 * m.k2 - a2 * m.k1) / kk;
    solenoidal.c1.add_term(m.k1, m.k2, m.parity, across * m.k2);
    solenoidal.c2.add_term(m.k1, m.k2, m.parity, -across * m.k1);
  }
  return {std::move(solenoidal), std::move(grad)};
}

}  // namespace

TrigVectorField leray_project(const TrigVectorField& x) { return helmholtz(x).first; }

TrigVectorField gradient_part(const TrigVectorField& x) { return helmholtz(x).second; }

bool is_divergence_free(const TrigVectorField& x, double tol) {
  const double scale = std::max(1.0, x.max_abs() * std::max(1, x.radius()));
  return divergence(x).max_abs() <= tol * scale;
}

}  // namespace liecurv::torus
