#pragma once

// Intertwining of pencils by a polynomial inner multiplier:
//
//     (A + A^* z) Theta(z) = Theta(z) (B + B^* z),
//
// equivalently invariance of Theta H^2 under M_{A + A^* z}.

#include <variant>

#include "gammaop/hardy.hpp"
#include "gammaop/types.hpp"

namespace gammaop {

struct BlhProblem {
  Matrix A;            // on E_* (m x m)
  SymbolPoly theta;    // E -> E_*  (m x k coefficients)
  Real inner_residual = 0;

  BlhProblem(Matrix a, SymbolPoly th, Index samples = 256);
};

/// max over `samples` boundary points of ||Theta(e^{it})^* Theta(e^{it}) - I||.
Real inner_residual(const SymbolPoly& theta, Index samples = 256);

struct BlhSolution {
  Matrix B;
  Real residual = 0;
  Index kernel_dim = 0;   // real dimension of the homogeneous solution space
  Real wB = 0;
  bool unique = false;    // kernel_dim == 0 and Theta inner within 1e-8
};

struct NoSolution {
  Matrix B;               // least-squares candidate
  Real residual = 0;
};

using BlhResult = std::variant<BlhSolution, NoSolution>;

/// Matches the coefficients of z^k, k = 0..deg+1, and solves the resulting
/// real-linear system in (Re B, Im B) by least squares.
BlhResult blh_solve(const BlhProblem& prob, const Tolerance& tol = {});

/// Mirror problem: given B on E, find A on E_* with the same identity.
/// Returns the least-squares A together with its residual.
std::pair<Matrix, Real> blh_solve_for_a(const Matrix& b, const SymbolPoly& theta, const Tolerance& tol = {});

/// max_k ||A Theta_k + A^* Theta_{k-1} - Theta_k B - Theta_{k-1} B^*||.
Real blh_residual(const Matrix& a, const SymbolPoly& theta, const Matrix& b);

struct InvarianceResult {
  bool invariant = false;
  Real residual = 0;
};

/// Distance of M_{A + A^* z} Theta f from Theta H^2 over polynomials f of
/// degree <= N - d - 1 (d = deg Theta), measured inside degrees 0..N where
/// all quantities are exact.
InvarianceResult invariance_check(const Matrix& a, const SymbolPoly& theta, Index n, const Tolerance& tol = {});

}  // namespace gammaop
