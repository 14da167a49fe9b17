#pragma once

// Classification of commuting pairs (S, P) against the symmetrized bidisc.
//
// * Gamma-unitary:  P unitary, S = S^* P, ||S|| <= 2.
// * Gamma-isometry: P isometric, S = S^* P, ||S|| <= 2.
// * Gamma-contraction: P contraction, ||S|| <= 2 and S - S^* P = D_P F D_P
//   for some F on the defect space of P with numerical radius w(F) <= 1.
//
// Every entry point rejects non-commuting input with ErrorKind::NotCommuting.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammaop/operator_pair.hpp"
#include "gammaop/types.hpp"

namespace gammaop {

enum class GammaKind { GammaUnitary, GammaIsometry, GammaContraction, NotGamma, Inconclusive };

std::string_view to_string(GammaKind kind);

struct NamedCheck {
  std::string name;
  bool passed = false;
  Real value = 0;
  Real threshold = 0;
};

struct PredicateReport {
  bool holds = false;
  std::vector<NamedCheck> checks;
};

struct ClassificationReport {
  GammaKind kind = GammaKind::Inconclusive;
  std::optional<Matrix> fundamental_op;  // in the orthonormal basis of ran D_P
  Real fundamental_residual = 0;
  Real wA = 0;
  std::vector<NamedCheck> checks;
};

/// Throws NotCommuting when ||SP - PS|| > residual_tol * max(1, ||S|| ||P||).
void require_commuting(const OperatorPair& pair, const Tolerance& tol = {});

PredicateReport is_gamma_unitary(const OperatorPair& pair, const Tolerance& tol = {});
PredicateReport is_gamma_isometry(const OperatorPair& pair, const Tolerance& tol = {});

struct FundamentalOp {
  Matrix F;        // on ran D_P, in the basis returned by defect_data
  Matrix basis;    // that basis (columns orthonormal)
  Real residual = 0;
};

/// Minimal-norm solution of D_P X D_P = S - S^* P, expressed on ran D_P.
FundamentalOp fundamental_op(const OperatorPair& pair, const Tolerance& tol = {});

/// The full criterion; kind is GammaContraction or NotGamma (Inconclusive
/// when the only failure is w(F) within 1e-6 of the slack).
ClassificationReport is_gamma_contraction(const OperatorPair& pair, const Tolerance& tol = {});

/// Most specific kind: GammaUnitary, then GammaIsometry, then the
/// contraction criterion.
ClassificationReport classify(const OperatorPair& pair, const Tolerance& tol = {});

/// A from a truncated pure model pair: the degree-0 block of S^* - S P^*
/// is A^*, all other blocks with degrees <= N-1 must vanish.
Matrix recover_pure_symbol(const OperatorPair& pair, Index n, Real tol = 1e-10);

/// Polynomial sum_{a+b<=deg} c_{ab} s^a p^b.
struct BivariatePoly {
  Index degree = 0;
  Matrix coeffs;  // (degree+1) x (degree+1), zero where a + b > degree

  static BivariatePoly constant(Complex c);
  static BivariatePoly monomial(Index a, Index b, Complex c = 1);

  Complex evaluate(Complex s, Complex p) const;
  Matrix evaluate(const Matrix& s, const Matrix& p) const;
};

/// sup over the distinguished boundary, from an n x n angle grid followed by
/// local refinement around the best grid point.
Real boundary_sup(const BivariatePoly& poly, Index grid);

/// sup_boundary |q| - ||q(S, P)||.
Real margin_for(const OperatorPair& pair, const BivariatePoly& poly, Index grid);

struct MarginResult {
  Real min_margin = 0;
  BivariatePoly witness;
};

/// Minimum margin over `trials` random polynomials of total degree <= degree
/// with coefficients uniform in the complex unit box.
MarginResult von_neumann_margin(const OperatorPair& pair, Index degree, Index trials, Index grid,
                                std::uint64_t seed, const Tolerance& tol = {});

}  // namespace gammaop
