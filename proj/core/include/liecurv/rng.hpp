#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace liecurv {

/// mt19937_64 seeded directly with the 64-bit seed. Uniforms use the top 53 bits;
/// normals use the cosine branch of Box-Muller (one normal per two uniforms), so draws
/// do not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace liecurv
