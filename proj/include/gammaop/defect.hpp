#pragma once

// Defect operators, the characteristic function and the truncated functional
// model of a completely non-unitary (c.n.u.) matrix contraction.
//
// For a matrix P the c.n.u. condition is spectral radius < 1, so P^m -> 0,
// the characteristic function is inner and the boundary defect Delta_P
// vanishes. The model space is then the orthogonal complement of Theta H^2
// inside H^2 over the defect space of P^*, and the truncation to degrees
// 0..N loses exactly the tail ||P^{N+1}||.

#include "gammaop/hardy.hpp"
#include "gammaop/types.hpp"

namespace gammaop {

struct DefectData {
  Matrix D_P;       // (I - P^* P)^{1/2}
  Matrix D_Pstar;   // (I - P P^*)^{1/2}
  Matrix Q_dP;      // orthonormal basis of ran D_P
  Matrix Q_dPstar;  // orthonormal basis of ran D_{P^*}

  Index rank_dP() const { return Q_dP.cols(); }
  Index rank_dPstar() const { return Q_dPstar.cols(); }
};

/// Throws NotAContraction if ||P|| > 1 + rank_tol.
void require_contraction(const Matrix& p, const Tolerance& tol);

DefectData defect_data(const Matrix& p, const Tolerance& tol = {});

/// Throws NotCnu when P has an eigenvalue on the unit circle (equivalently,
/// at finite dimension, a reducing subspace on which P is unitary).
void require_cnu(const Matrix& p, const Tolerance& tol = {});

/// Taylor data of Theta_P in the defect bases, D_P -> D_{P^*}.
struct CharFn {
  SymbolPoly taylor;
  Matrix source_P;
  DefectData defect;
  Index degree_used = 0;
};

/// C_0 = -Q_*^* P Q, C_k = Q_*^* D_{P^*} P^{*(k-1)} D_P Q for 1 <= k <= K.
CharFn theta_taylor(const Matrix& p, Index k, const Tolerance& tol = {});

/// Theta_P(z) through the resolvent (I - z P^*)^{-1}, not the series.
Matrix theta_eval(const CharFn& theta, Complex z);

/// Delta_P(t) = (I - Theta(e^{it})^* Theta(e^{it}))^{1/2}.
Matrix delta_eval(const CharFn& theta, Real t, const Tolerance& tol = {});

/// max_t ||Delta_P(t)|| over `samples` equispaced t.
Real max_delta_norm(const CharFn& theta, Index samples = 256, const Tolerance& tol = {});

/// X_P = (lim P^m P^{*m})^{1/2}, iterating M <- P M P^* from the identity.
Matrix x_limit(const Matrix& p, const Tolerance& tol = {}, Index max_iterations = 200000);

/// ||P^{N+1}||: the norm lost by truncating the model at degree N.
Real truncation_error(const Matrix& p, Index n);

/// max(32, smallest N with ||P^{N+1}|| <= 1e-10 and rho(P)^{N+1} <= 1e-10).
Index default_truncation(const Matrix& p);

struct ModelSpace {
  Matrix basis;           // orthonormal columns inside H^2_{D_{P^*}}, degrees 0..N
  Index n = 0;            // truncation degree
  Index block = 0;        // rank of D_{P^*}
  Real delta_norm = 0;    // sampled max ||Delta_P(t)||
  Real trunc_error = 0;   // ||P^{N+1}||
  CharFn theta;
};

/// Truncated model space of a c.n.u. contraction. With T the truncated
/// Toeplitz operator of Theta_P on degrees 0..N, I - T T^* is the compression
/// of the model-space projection, and its range is the truncated model space.
ModelSpace build_model_space(const Matrix& p, Index n, const Tolerance& tol = {});

/// The embedding h -> sum_{k<=N} z^k (Q_*^* D_{P^*} P^{*k} h) as a matrix.
Matrix pi_nf_matrix(const Matrix& p, Index n, const Tolerance& tol = {});
Vector pi_nf_embed(const Matrix& p, Index n, const Vector& h, const Tolerance& tol = {});

}  // namespace gammaop
