#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gammaop/types.hpp"

namespace gammaop {

/// Seeded generator whose output is identical on every platform.
///
/// std::mt19937_64 is fully specified by the standard, the distributions in
/// <random> are not, so the variates are derived from the raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  Real uniform() { return Real(engine_() >> 11) * 0x1.0p-53; }
  Real uniform(Real lo, Real hi) { return lo + (hi - lo) * uniform(); }
  Index index(Index n) { return static_cast<Index>(uniform() * Real(n)) % n; }

  /// Standard normal via Box-Muller.
  Real normal() {
    const Real u1 = 1 - uniform();
    const Real u2 = uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
  }

  /// Uniform on the square [-1, 1] x [-1, 1] of the complex plane.
  Complex complex_box() { return {uniform(-1, 1), uniform(-1, 1)}; }
  Complex complex_normal() { return Complex(normal(), normal()) / std::sqrt(Real(2)); }
  /// Uniform in the disc of the given radius.
  Complex complex_disc(Real radius) {
    return std::polar(radius * std::sqrt(uniform()), 2 * std::numbers::pi * uniform());
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gammaop
