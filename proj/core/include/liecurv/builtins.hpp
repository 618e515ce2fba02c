#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "liecurv/algebra.hpp"
#include "liecurv/semidirect.hpp"

namespace liecurv::builtins {

/// so(3) with [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
MetricAlgebra so3(const Matrix& gram);
MetricAlgebra so3(double i1 = 1.0, double i2 = 1.0, double i3 = 1.0);
MetricAlgebra abelian(std::size_t dim, const Matrix& gram);
MetricAlgebra abelian(std::size_t dim);

/// G acting on itself by conjugation: h = g with the same Gram, b(X) = ad(X).
SemidirectAlgebra conjugation(const MetricAlgebra& g);

/// g x| g*_reg in A-preimage coordinates: h is an abelian copy of g with the same Gram and
/// b(X)Y = -ad(X)^T Y.
SemidirectAlgebra magnetic(const MetricAlgebra& g);

/// so(3) acting on R^3 by rotations (the Euclidean algebra), Euclidean Grams on both factors.
SemidirectAlgebra linear_so3_on_r3();
inline SemidirectAlgebra euclidean() { return linear_so3_on_r3(); }

/// Seeded random solvable algebra of dimension `dim` >= 2: R x|_D L with L abelian or
/// heis3 + abelian and D a random derivation, written in a random basis with a random SPD Gram.
MetricAlgebra random_solvable(std::uint64_t seed, std::size_t dim);

/// Seeded random 4-dimensional solvable semidirect product aff(1) x| heis3 with a random
/// homomorphism into Der(heis3) and random SPD Grams. Not isometric in general.
SemidirectAlgebra random_solvable_semidirect(std::uint64_t seed);

/// Resolves `so3`, `so3:I1,I2,I3`, `abelian:N`, `random:SEED:DIM`.
MetricAlgebra resolve_algebra(std::string_view name);
/// Resolves `conjugation:<algebra>`, `magnetic:<algebra>`, `euclidean`, `linear_so3_on_r3`,
/// `random:SEED`.
SemidirectAlgebra resolve_semidirect(std::string_view name);

}  // namespace liecurv::builtins
