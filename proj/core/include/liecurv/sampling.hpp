#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "liecurv/algebra.hpp"
#include "liecurv/backend.hpp"
#include "liecurv/curvature.hpp"
#include "liecurv/errors.hpp"
#include "liecurv/rng.hpp"

namespace liecurv {

/// Which planes of a semidirect product to draw.
///   any:        both directions generic (X, Y)
///   gg, hh:     both directions in one factor
///   gh:         (X, 0) and (0, Y)
///   contains_h: first direction (0, Y), second generic
enum class PlaneFamily { Any, GG, GH, HH, ContainsH };

PlaneFamily parse_family(const std::string& name);
std::string to_string(PlaneFamily f);

/// Standard-normal coordinate vector.
Vector draw_coordinates(Rng& rng, std::size_t dim);

/// Orthonormalizes (x, y) in the backend inner product, keeping the direction of x.
/// Returns false when the pair is degenerate.
template <MetricAlgebraBackend B>
bool orthonormalize(const B& b, typename B::Element& x, typename B::Element& y, double tol = kDegeneracyTol) {
  const double xx = b.inner(x, x);
  const double yy = b.inner(y, y);
  if (!(xx > 0.0) || !(yy > 0.0) || is_degenerate(b, x, y, tol)) return false;
  x = (1.0 / std::sqrt(xx)) * x;
  y = y - b.inner(y, x) * x;
  const double rr = b.inner(y, y);
  if (!(rr > 0.0)) return false;
  y = (1.0 / std::sqrt(rr)) * y;
  return true;
}

/// `count` orthonormal planes from a seeded mt19937_64 stream; `draw(rng, first)` proposes a
/// direction (first = true for x). Degenerate draws are redrawn, at most 100 * count times in total.
template <MetricAlgebraBackend B, class Draw>
std::vector<Plane<typename B::Element>> sample_planes(const B& b, const Draw& draw, std::uint64_t seed,
                                                      std::size_t count) {
  Rng rng(seed);
  std::vector<Plane<typename B::Element>> planes;
  planes.reserve(count);
  std::size_t rejected = 0;
  while (planes.size() < count) {
    auto x = draw(rng, true);
    auto y = draw(rng, false);
    if (orthonormalize(b, x, y)) {
      planes.push_back({std::move(x), std::move(y)});
    } else if (++rejected > 100 * count) {
      throw SamplingExhausted("too many degenerate plane draws");
    }
  }
  return planes;
}

/// Planes of a finite-dimensional algebra with standard-normal coordinates.
std::vector<Plane<Vector>> sample_planes(const MetricAlgebra& algebra, std::uint64_t seed, std::size_t count);

/// Planes of a finite semidirect product (as product coordinates), restricted to `family`.
std::vector<Plane<Vector>> sample_product_planes(const MetricAlgebra& product, std::size_t dim_g,
                                                 PlaneFamily family, std::uint64_t seed, std::size_t count);

}  // namespace liecurv
