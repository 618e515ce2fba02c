#include "liecurv/sampling.hpp"

namespace liecurv {

PlaneFamily parse_family(const std::string& name) {
  if (name == "any") return PlaneFamily::Any;
  if (name == "gg") return PlaneFamily::GG;
  if (name == "gh") return PlaneFamily::GH;
  if (name == "hh") return PlaneFamily::HH;
  if (name == "contains_h" || name == "contains-h") return PlaneFamily::ContainsH;
  throw ConfigError("unknown plane family '" + name + "'");
}

std::string to_string(PlaneFamily f) {
  switch (f) {
    case PlaneFamily::Any: return "any";
    case PlaneFamily::GG: return "gg";
    case PlaneFamily::GH: return "gh";
    case PlaneFamily::HH: return "hh";
    case PlaneFamily::ContainsH: return "contains_h";
  }
  return "any";
}

Vector draw_coordinates(Rng& rng, std::size_t dim) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rng.normal();
  return v;
}

std::vector<Plane<Vector>> sample_planes(const MetricAlgebra& algebra, std::uint64_t seed, std::size_t count) {
  return sample_planes(
      algebra, [&](Rng& rng, bool) { return draw_coordinates(rng, algebra.dim()); }, seed, count);
}

std::vector<Plane<Vector>> sample_product_planes(const MetricAlgebra& product, std::size_t dim_g,
                                                 PlaneFamily family, std::uint64_t seed, std::size_t count) {
  const std::size_t n = product.dim();
  const std::size_t dim_h = n - dim_g;
  auto draw = [&](Rng& rng, bool first) {
    Vector v = draw_coordinates(rng, n);
    const bool keep_g = family == PlaneFamily::Any || family == PlaneFamily::GG ||
                        (family == PlaneFamily::GH && first) || (family == PlaneFamily::ContainsH && !first);
    const bool keep_h = family == PlaneFamily::Any || family == PlaneFamily::HH ||
                        (family == PlaneFamily::GH && !first) || family == PlaneFamily::ContainsH;
    if (!keep_g) v.head(dim_g).setZero();
    if (!keep_h) v.tail(dim_h).setZero();
    return v;
  };
  return sample_planes(product, draw, seed, count);
}

}  // namespace liecurv
