#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "liecurv/algebra.hpp"
#include "liecurv/backend.hpp"
#include "liecurv/errors.hpp"

namespace liecurv {

enum class Scheme { Rk4, ImplicitMidpoint };

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme s);

struct IntegratorConfig {
  double dt = 1e-3;
  std::size_t steps = 1000;
  Scheme scheme = Scheme::Rk4;
  double midpoint_tol = 1e-12;
  int midpoint_max_iter = 50;

  void validate() const {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (steps < 1) throw ConfigError("steps must be at least 1");
  }
};

/// Right logarithmic derivative (u, alpha). For a plain group alpha is an empty vector.
using GeodesicState = Pair<Vector, Vector>;

template <class State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  /// inner(u,u) + inner(alpha,alpha) at each recorded time.
  std::vector<double> energy;
};

/// u_t = -ad(u)^T u
template <MetricAlgebraBackend B>
typename B::Element rhs_generic(const B& b, const typename B::Element& u) {
  return -1.0 * b.ad_transpose(u, u);
}

/// u_t = -ad(u)^T u + h(alpha, alpha),  alpha_t = -ad(alpha)^T alpha - b(u)^T alpha
template <SemidirectBackend S>
Pair<typename S::GElement, typename S::HElement> rhs_semidirect(const S& sd, const typename S::GElement& u,
                                                                const typename S::HElement& alpha) {
  return {sd.h_map(alpha, alpha) - sd.g().ad_transpose(u, u),
          -1.0 * (sd.h().ad_transpose(alpha, alpha) + sd.act_transpose(u, alpha))};
}

/// Magnetic extension in A-preimage form: u_t = -ad(u)^T u + ad(v)^T v,  v_t = ad(u) v
template <MetricAlgebraBackend B>
Pair<typename B::Element, typename B::Element> rhs_magnetic(const B& g, const typename B::Element& u,
                                                            const typename B::Element& v) {
  return {g.ad_transpose(v, v) - g.ad_transpose(u, u), g.bracket(u, v)};
}

/// Fixed-step integration of s' = rhs(s). `energy` is recorded at every step; `norm` measures
/// fixed-point corrections of the implicit midpoint rule; `post_step` may project or truncate
/// each new state (identity by default).
template <class State, class Rhs, class Energy, class Norm, class PostStep>
Trajectory<State> integrate(const Rhs& rhs, State state, const IntegratorConfig& config, const Energy& energy,
                            const Norm& norm, const PostStep& post_step) {
  config.validate();
  Trajectory<State> out;
  out.times.reserve(config.steps + 1);
  out.states.reserve(config.steps + 1);
  out.energy.reserve(config.steps + 1);
  out.times.push_back(0.0);
  out.energy.push_back(energy(state));
  out.states.push_back(state);

  const double dt = config.dt;
  for (std::size_t n = 0; n < config.steps; ++n) {
    State next;
    if (config.scheme == Scheme::Rk4) {
      const State k1 = rhs(state);
      const State k2 = rhs(state + (0.5 * dt) * k1);
      const State k3 = rhs(state + (0.5 * dt) * k2);
      const State k4 = rhs(state + dt * k3);
      next = state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } else {
      next = state + dt * rhs(state);
      bool converged = false;
      for (int it = 0; it < config.midpoint_max_iter; ++it) {
        State candidate = state + dt * rhs(0.5 * (state + next));
        const double change = norm(candidate - next);
        const double size = norm(candidate);
        next = std::move(candidate);
        if (change <= config.midpoint_tol * (1.0 + size)) {
          converged = true;
          break;
        }
      }
      if (!converged)
        throw MidpointDivergence("implicit midpoint iteration did not converge at step " + std::to_string(n));
    }
    state = post_step(std::move(next));
    out.times.push_back(double(n + 1) * dt);
    out.energy.push_back(energy(state));
    out.states.push_back(state);
  }
  return out;
}

template <class State, class Rhs, class Energy, class Norm>
Trajectory<State> integrate(const Rhs& rhs, State state, const IntegratorConfig& config, const Energy& energy,
                            const Norm& norm) {
  return integrate(rhs, std::move(state), config, energy, norm, [](State s) { return s; });
}

/// Geodesic of a right-invariant metric on a group with metric algebra `b`.
template <MetricAlgebraBackend B>
Trajectory<typename B::Element> integrate_geodesic(const B& b, typename B::Element u0, const IntegratorConfig& config) {
  using E = typename B::Element;
  return integrate(
      [&b](const E& u) { return rhs_generic(b, u); }, std::move(u0), config,
      [&b](const E& u) { return b.inner(u, u); }, [&b](const E& u) { return std::sqrt(b.inner(u, u)); });
}

/// Geodesic on a semidirect product, in the variables (u, alpha).
template <SemidirectBackend S>
Trajectory<Pair<typename S::GElement, typename S::HElement>> integrate_semidirect(
    const S& sd, Pair<typename S::GElement, typename S::HElement> s0, const IntegratorConfig& config) {
  using P = Pair<typename S::GElement, typename S::HElement>;
  auto energy = [&sd](const P& s) { return sd.g().inner(s.first, s.first) + sd.h().inner(s.second, s.second); };
  return integrate([&sd](const P& s) { return rhs_semidirect(sd, s.first, s.second); }, std::move(s0), config,
                   energy, [energy](const P& s) { return std::sqrt(energy(s)); });
}

/// u(t) = u0, v(t) = exp(t ad(u0)) v0: geodesics of G x| G under conjugation when the metric
/// is Ad-invariant. Throws NotAdInvariant otherwise.
GeodesicState exact_conjugation_solution(const MetricAlgebra& g, const Vector& u0, const Vector& v0, double t);

/// True when every ad(e_i) is skew-adjoint within the adjoint tolerance.
bool is_ad_invariant(const MetricAlgebra& g);

/// Group path from right logarithmic derivatives xi_n = sum_i coords_n[i] * generators[i]:
/// g' = xi g, stepped with g_{n+1} = exp(dt (xi_n + xi_{n+1}) / 2) g_n from g_0 = identity.
std::vector<Matrix> reconstruct_matrix_path(const std::vector<Matrix>& generators,
                                            const std::vector<Vector>& coords, double dt);

/// 3x3 generators of so(3) (hat map of the standard basis).
std::vector<Matrix> so3_generators();
/// 4x4 homogeneous generators of the Euclidean algebra: rotations then translations.
std::vector<Matrix> euclidean_generators();

}  // namespace liecurv
