#include "liecurv/builtins.hpp"

#include <Eigen/LU>

#include <charconv>
#include <string>
#include <vector>

#include "liecurv/rng.hpp"

namespace liecurv::builtins {

namespace {

Matrix random_normal(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.normal();
  return m;
}

Matrix random_spd(Rng& rng, std::size_t n) {
  const Matrix a = random_normal(rng, n, n);
  return a.transpose() * a / double(n) + 0.5 * Matrix::Identity(n, n);
}

/// Near-identity basis change, comfortably invertible.
Matrix random_basis_change(Rng& rng, std::size_t n) {
  return Matrix::Identity(n, n) + 0.3 * random_normal(rng, n, n);
}

/// Structure constants in the basis e'_a = sum_b P(b,a) e_b.
StructureConstants change_basis(const StructureConstants& c, const Matrix& p) {
  const auto n = c.dim();
  const Matrix pinv = p.inverse();
  StructureConstants out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = Vector::Zero(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const double w = p(i, a) * p(j, b);
          if (w == 0.0) continue;
          for (std::size_t k = 0; k < n; ++k) v[k] += w * c(i, j, k);
        }
      const Vector coords = pinv * v;
      for (std::size_t k = 0; k < n; ++k) out(a, b, k) = coords[k];
    }
  return out;
}

/// Derivation matrix (columns are images of f1, f2, f3) of heis3 with [f1,f2] = f3.
Matrix heisenberg_derivation(const Eigen::Matrix2d& block, double c1, double c2) {
  Matrix d = Matrix::Zero(3, 3);
  d.topLeftCorner(2, 2) = block;
  d(2, 0) = c1;
  d(2, 1) = c2;
  d(2, 2) = block.trace();
  return d;
}

StructureConstants heisenberg() {
  StructureConstants c(3);
  c.set_antisymmetric(0, 1, 2, 1.0);
  return c;
}

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, end - pos);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw ConfigError("cannot parse number '" + std::string(item) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("cannot parse integer '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto end = text.find(sep, pos);
    parts.push_back(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return parts;
}

}  // namespace

MetricAlgebra so3(const Matrix& gram) {
  MetricAlgebraSpec spec;
  spec.name = "so3";
  spec.structure = StructureConstants(3);
  spec.structure.set_antisymmetric(0, 1, 2, 1.0);
  spec.structure.set_antisymmetric(1, 2, 0, 1.0);
  spec.structure.set_antisymmetric(2, 0, 1, 1.0);
  spec.gram = gram;
  return MetricAlgebra(std::move(spec));
}

MetricAlgebra so3(double i1, double i2, double i3) { return so3(Eigen::Vector3d(i1, i2, i3).asDiagonal().toDenseMatrix()); }

MetricAlgebra abelian(std::size_t dim, const Matrix& gram) {
  MetricAlgebraSpec spec;
  spec.name = "abelian" + std::to_string(dim);
  spec.structure = StructureConstants(dim);
  spec.gram = gram;
  return MetricAlgebra(std::move(spec));
}

MetricAlgebra abelian(std::size_t dim) { return abelian(dim, Matrix::Identity(dim, dim)); }

SemidirectAlgebra conjugation(const MetricAlgebra& g) {
  ActionSpec action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.generators.push_back(g.ad_basis(i));
  return SemidirectAlgebra(g, g, std::move(action), "conjugation:" + g.name());
}

SemidirectAlgebra magnetic(const MetricAlgebra& g) {
  ActionSpec action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.generators.push_back(-g.metric_adjoint(g.ad_basis(i)));
  MetricAlgebraSpec dual;
  dual.name = g.name() + "*";
  dual.structure = StructureConstants(g.dim());
  dual.gram = g.gram();
  return SemidirectAlgebra(g, MetricAlgebra(std::move(dual), g.tolerances()), std::move(action),
                           "magnetic:" + g.name());
}

SemidirectAlgebra linear_so3_on_r3() {
  const MetricAlgebra g = so3();
  ActionSpec action;
  for (std::size_t i = 0; i < 3; ++i) action.generators.push_back(g.ad_basis(i));
  MetricAlgebra r3 = abelian(3);
  return SemidirectAlgebra(g, std::move(r3), std::move(action), "euclidean");
}

MetricAlgebra random_solvable(std::uint64_t seed, std::size_t dim) {
  if (dim < 2) throw ConfigError("random solvable algebra needs dim >= 2");
  Rng rng(seed);
  const std::size_t m = dim - 1;
  const bool use_heisenberg = dim >= 4 && (seed % 2 == 1);

  // Ideal L of dimension m, derivation D of L.
  StructureConstants ideal(m);
  Matrix d = random_normal(rng, m, m);
  if (use_heisenberg) {
    auto heis = heisenberg();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) ideal(i, j, k) = heis(i, j, k);
    Eigen::Matrix2d block;
    block << rng.normal(), rng.normal(), rng.normal(), rng.normal();
    const Matrix dh = heisenberg_derivation(block, rng.normal(), rng.normal());
    d.topLeftCorner(3, 3) = dh;
    d.topRightCorner(3, m - 3).setZero();
    d.bottomLeftCorner(m - 3, 3).setZero();
  }

  StructureConstants c(dim);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) c(1 + i, 1 + j, 1 + k) = ideal(i, j, k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) c.set_antisymmetric(0, 1 + j, 1 + k, d(k, j));

  MetricAlgebraSpec spec;
  spec.name = "random:" + std::to_string(seed) + ":" + std::to_string(dim);
  spec.structure = change_basis(c, random_basis_change(rng, dim));
  spec.gram = random_spd(rng, dim);
  Tolerances strict;
  strict.jacobi = 1e-12;
  if (auto report = validate(spec, strict); !report.passed())
    throw ValidationError("random algebra rejected: " + report.summary());
  return MetricAlgebra(std::move(spec));
}

SemidirectAlgebra random_solvable_semidirect(std::uint64_t seed) {
  Rng rng(seed);

  // aff(1): [a, b] = b, in a random basis.
  StructureConstants caff(2);
  caff.set_antisymmetric(0, 1, 1, 1.0);
  const Matrix pg = random_basis_change(rng, 2);

  // b(a) = diag(p, p-1) block, b(b) = beta E12 block; f3 rows fixed by [b(a), b(b)] = b(b).
  const double p = rng.uniform(-1.0, 0.0);
  const double beta = rng.normal();
  Eigen::Matrix2d block_a = Eigen::Vector2d(p, p - 1.0).asDiagonal();
  Eigen::Matrix2d block_b = Eigen::Matrix2d::Zero();
  block_b(0, 1) = beta;
  const Eigen::RowVector2d ca(rng.normal(), rng.normal());
  const Eigen::RowVector2d cb = -ca * block_b * Eigen::Vector2d(1.0 / (p - 2.0), 1.0 / (p - 1.0)).asDiagonal();
  const Matrix da = heisenberg_derivation(block_a, ca[0], ca[1]);
  const Matrix db = heisenberg_derivation(block_b, cb[0], cb[1]);

  const Matrix ph = random_basis_change(rng, 3);
  const Matrix ph_inv = ph.inverse();

  MetricAlgebraSpec gspec;
  gspec.name = "aff1";
  gspec.structure = change_basis(caff, pg);
  gspec.gram = random_spd(rng, 2);
  MetricAlgebraSpec hspec;
  hspec.name = "heis3";
  hspec.structure = change_basis(heisenberg(), ph);
  hspec.gram = random_spd(rng, 3);

  ActionSpec action;
  for (std::size_t a = 0; a < 2; ++a) {
    const Matrix op = pg(0, a) * da + pg(1, a) * db;
    action.generators.push_back(ph_inv * op * ph);
  }
  return SemidirectAlgebra(MetricAlgebra(std::move(gspec)), MetricAlgebra(std::move(hspec)), std::move(action),
                           "random:" + std::to_string(seed));
}

MetricAlgebra resolve_algebra(std::string_view name) {
  const auto parts = split(name, ':');
  if (parts[0] == "so3") {
    if (parts.size() == 1) return so3();
    if (parts.size() != 2) throw ConfigError("expected so3 or so3:I1,I2,I3");
    const auto d = parse_numbers(parts[1]);
    if (d.size() != 3) throw ConfigError("so3 Gram needs three diagonal entries");
    return so3(d[0], d[1], d[2]);
  }
  if (parts[0] == "abelian" && parts.size() == 2) return abelian(parse_uint(parts[1]));
  if (parts[0] == "random" && parts.size() == 3) return random_solvable(parse_uint(parts[1]), parse_uint(parts[2]));
  throw ConfigError("unknown algebra '" + std::string(name) + "'");
}

SemidirectAlgebra resolve_semidirect(std::string_view name) {
  const auto colon = name.find(':');
  const auto head = name.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  if (head == "conjugation" && !rest.empty()) return conjugation(resolve_algebra(rest));
  if (head == "magnetic" && !rest.empty()) return magnetic(resolve_algebra(rest));
  if ((head == "euclidean" || head == "linear_so3_on_r3") && rest.empty()) return linear_so3_on_r3();
  if (head == "random" && !rest.empty()) return random_solvable_semidirect(parse_uint(rest));
  throw ConfigError("unknown semidirect algebra '" + std::string(name) + "'");
}

}  // namespace liecurv::builtins
