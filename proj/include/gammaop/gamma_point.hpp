#pragma once

#include <vector>

#include "gammaop/types.hpp"

namespace gammaop {

/// A point (s, p) of C^2: s plays the role of a sum, p of a product.
struct GammaPoint {
  Complex s;
  Complex p;
};

/// Result of solving s = beta + p * conj(beta).
struct BetaSolution {
  Complex beta;
  bool exact = false;
  Real residual = 0;
};

/// (z1 + z2, z1 z2).
GammaPoint symmetrize(Complex z1, Complex z2);

/// The two roots of t^2 - s t + p, larger modulus first.
std::pair<Complex, Complex> gamma_roots(const GammaPoint& pt);

/// Membership in the closed symmetrized bidisc: both roots of t^2 - s t + p
/// have modulus <= 1 + tol.
bool in_gamma(const GammaPoint& pt, Real tol = 1e-9);

/// Solves s = beta + p conj(beta) as a 2x2 real system in (Re beta, Im beta).
/// For |p| = 1 the system is singular; the minimal-norm least-squares
/// solution is returned and `exact` reports whether it is consistent.
BetaSolution beta_solve(const GammaPoint& pt, Real tol = 1e-9);

/// Membership via the beta characterization: |p| <= 1, |beta| <= 1 and the
/// beta equation consistent.
bool in_gamma_by_beta(const GammaPoint& pt, Real tol = 1e-9);

/// n*n points of the distinguished boundary on the uniform angle grid
/// theta_j = 2 pi j / n, ordered with the first angle outermost.
std::vector<GammaPoint> boundary_sample(Index n);

}  // namespace gammaop
