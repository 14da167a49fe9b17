#pragma once

// Explicit dilations and functional models of Gamma-contractions.

#include <optional>

#include "gammaop/defect.hpp"
#include "gammaop/operator_pair.hpp"
#include "gammaop/types.hpp"

namespace gammaop {

/// Isometric dilation on H (+) H^2_{D_P} truncated to degrees 0..N.
///
///   V = [ P     0   ]      W = [ S         0          ]
///       [ D_P   M_z ]          [ A^* D_P   A + A^* M_z ]
///
/// where the lower-left entries map h to a constant function (degree-0
/// block, in the basis of ran D_P) and A is the fundamental operator.
struct SchafferPair {
  Matrix V;
  Matrix W;
  Matrix embed;   // h -> h (+) 0
  Matrix A_used;
  Index head_dim = 0;
  Index defect_dim = 0;
  Index n = 0;

  /// Leading coordinates (H and degrees 0..N-1) where the truncated pair is
  /// an exact restriction of the untruncated one.
  Index window() const { return head_dim + defect_dim * n; }
  OperatorPair as_pair() const;
};

SchafferPair schaffer_build(const OperatorPair& pair, Index n, const Tolerance& tol = {});

struct NfAyModel {
  ModelSpace model_space;
  Matrix symbol_A;          // on ran D_{P^*}
  Matrix dstar_rotation;    // unitary applied to the default basis of ran D_{P^*}
  Matrix S_model;
  Matrix P_model;
  Real residual_S = 0;      // trace-word discrepancy of (S_model, P_model) vs (S, P)
  Real residual_P = 0;      // trace-word discrepancy of P_model vs P
};

/// Functional model of a Gamma-contraction with c.n.u. P: the symbol solves
/// D_{P^*} G D_{P^*} = S^* - S P^* with A = G^*, and (S, P) is compressed
/// from (M_{A + A^* z}, M_z) to the model space. `n` = 0 selects
/// default_truncation(P). `dstar_rotation` re-expresses the defect space of
/// P^* in a rotated orthonormal basis.
NfAyModel nf_ay_build(const OperatorPair& pair, Index n = 0, const Tolerance& tol = {},
                      const std::optional<Matrix>& dstar_rotation = std::nullopt);

struct CompressedScalar {
  Matrix X;
  Matrix source_A;
  Real decompressed_wr = 0;
  Real residual = 0;   // ||S_model - (X + P_model X^*)||
};

/// X = compression of the constant multiplier I (x) A to the model space.
/// Throws ResidualTooLarge when S_model = X + P_model X^* fails by more than
/// max(1e-8, 10 trunc_error).
CompressedScalar compressed_scalar(const NfAyModel& model);

/// Recovers X from (S, P) alone: X^* is the unique solution of the Stein
/// equation Y - P Y P^* = S^* - S P^*, which is solvable because rho(P) < 1.
Matrix rederive_compressed_scalar(const Matrix& s, const Matrix& p);

/// (U1 + U2, U1 U2) for commuting unitaries.
OperatorPair gamma_unitary_synth(const Matrix& u1, const Matrix& u2, const Tolerance& tol = {});

struct FactorizationResult {
  Matrix Phi;                 // NF dilation space -> other dilation space
  Real isometry_residual = 0; // ||Phi^* Phi - I|| on the generated span
  Real block_residual = 0;    // failure of Phi M_z = V Phi and Phi M_z^m Pi = V^m embed
  Real dilation_residual = 0; // ||V^* embed - embed P^*||
  Index domain_rank = 0;
  Index range_rank = 0;
};

struct FactorizationOptions {
  Index depth = 0;            // largest power m; 0 picks a depth covering the other space
  Index nf_truncation = 0;    // 0 picks default_truncation(P)
  Real dilation_tol = 1e-8;
};

/// Builds Phi on span{M_z^m Pi_NF h : m <= depth} from Phi M_z^m Pi_NF h =
/// V^m embed h. The caller must size the other dilation so that V^m embed is
/// exact for m <= depth.
FactorizationResult factorization_check(const Matrix& p, const Matrix& v, const Matrix& embed,
                                        const FactorizationOptions& opts = {}, const Tolerance& tol = {});

/// The truncated NF dilation (M_z on degrees 0..N + pad, Pi_NF padded).
struct NfDilation {
  Matrix V;
  Matrix embed;
};
NfDilation nf_dilation(const Matrix& p, Index n, Index pad, const Tolerance& tol = {});

}  // namespace gammaop
