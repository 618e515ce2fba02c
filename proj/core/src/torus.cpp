#include "liecurv/torus.hpp"

namespace liecurv::torus {

namespace {

void require_divergence_free(const TrigVectorField& x, const char* what) {
  if (!is_divergence_free(x)) throw NotDivergenceFree(std::string(what) + " is not divergence free");
}

}  // namespace

TrigVectorField ad_transpose_vol(const TrigVectorField& x, const TrigVectorField& y) {
  require_divergence_free(x, "ad_transpose_vol: X");
  require_divergence_free(y, "ad_transpose_vol: Y");
  return leray_project(directional_derivative(x, y) + jacobian_transpose_apply(x, y));
}

TrigVectorField ad_transpose_full(const TrigVectorField& x, const TrigVectorField& y) {
  return directional_derivative(x, y) + scale(divergence(x), y) + jacobian_transpose_apply(x, y);
}

const VolumeFieldBackend& volume_backend() {
  static const VolumeFieldBackend backend;
  return backend;
}

double mhd_mixed_plane(const TrigVectorField& x, const TrigVectorField& y) {
  require_divergence_free(x, "mhd_mixed_plane: X");
  require_divergence_free(y, "mhd_mixed_plane: Y");
  const TrigVectorField pxx = leray_project(directional_derivative(x, x));
  const TrigVectorField pyy = leray_project(directional_derivative(y, y));
  const TrigVectorField jty = jacobian_transpose_apply(x, y);
  const TrigVectorField a = leray_project(directional_derivative(y, x) + jty);
  const TrigVectorField br = lie_bracket(x, y);
  const TrigVectorField c = leray_project(directional_derivative(x, y) + jty);
  return inner(pxx, pyy) - 0.25 * inner(a, a) + 0.5 * inner(br, br) - 0.5 * inner(c, c);
}

double mhd_pure_magnetic_plane(const TrigVectorField& y1, const TrigVectorField& y2) {
  require_divergence_free(y1, "mhd_pure_magnetic_plane: Y1");
  require_divergence_free(y2, "mhd_pure_magnetic_plane: Y2");
  const TrigVectorField s = leray_project(directional_derivative(y1, y2) + directional_derivative(y2, y1));
  return 0.25 * inner(s, s) -
         inner(leray_project(directional_derivative(y1, y1)), leray_project(directional_derivative(y2, y2)));
}

double arnold_flat_curvature(const TrigVectorField& x, const TrigVectorField& y) {
  require_divergence_free(x, "arnold_flat_curvature: X");
  require_divergence_free(y, "arnold_flat_curvature: Y");
  const TrigVectorField qxy = gradient_part(directional_derivative(x, y));
  return inner(gradient_part(directional_derivative(x, x)), gradient_part(directional_derivative(y, y))) -
         inner(qxy, qxy);
}

TrigVectorField euler_rhs(const TrigVectorField& u) { return -leray_project(directional_derivative(u, u)); }

std::pair<TrigVectorField, TrigFunction> passive_scalar_rhs(const TrigVectorField& u, const TrigFunction& f) {
  return {euler_rhs(u), -apply(u, f)};
}

std::pair<TrigVectorField, TrigFunction> compressible_rhs(const TrigVectorField& u, const TrigFunction& f) {
  const TrigFunction div = divergence(u);
  const TrigFunction speed2 = multiply(u.c1, u.c1) + multiply(u.c2, u.c2);
  TrigVectorField ut = -directional_derivative(u, u) - scale(div, u) - 0.5 * gradient(speed2) - scale(f, gradient(f));
  TrigFunction ft = -apply(u, f) - multiply(f, div);
  return {std::move(ut), std::move(ft)};
}

std::pair<TrigVectorField, TrigVectorField> mhd_rhs(const TrigVectorField& u, const TrigVectorField& b) {
  return {leray_project(directional_derivative(b, b) - directional_derivative(u, u)), -lie_bracket(u, b)};
}

std::vector<Mode> canonical_modes(int band) {
  std::vector<Mode> modes;
  modes.push_back({0, 0, Parity::Cos});
  for (int k1 = 0; k1 <= band; ++k1)
    for (int k2 = -band; k2 <= band; ++k2) {
      if (k1 == 0 && k2 <= 0) continue;
      modes.push_back({k1, k2, Parity::Cos});
      modes.push_back({k1, k2, Parity::Sin});
    }
  return modes;
}

TrigFunction random_function(Rng& rng, int band) {
  TrigFunction f;
  for (const auto& m : canonical_modes(band)) f.add_term(m.k1, m.k2, m.parity, rng.normal());
  return f;
}

TrigVectorField random_divergence_free(Rng& rng, int band) {
  TrigFunction psi;
  for (const auto& m : canonical_modes(band)) {
    if (m.k1 == 0 && m.k2 == 0) continue;
    psi.add_term(m.k1, m.k2, m.parity, rng.normal());
  }
  TrigVectorField x = skew_gradient(psi);
  x.c1.add_term(0, 0, Parity::Cos, rng.normal());
  x.c2.add_term(0, 0, Parity::Cos, rng.normal());
  return x;
}

TrigVectorField random_field(Rng& rng, int band) {
  TrigVectorField x;
  x.c1 = random_function(rng, band);
  x.c2 = random_function(rng, band);
  return x;
}

}  // namespace liecurv::torus
