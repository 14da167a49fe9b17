#pragma once

// Seeded generators for property suites.

#include <vector>

#include "gammaop/hardy.hpp"
#include "gammaop/operator_pair.hpp"
#include "gammaop/random.hpp"

namespace gammaop {

Matrix random_gaussian(Rng& rng, Index rows, Index cols);
/// Haar-distributed unitary (QR of a Gaussian matrix with phase fix).
Matrix random_unitary(Rng& rng, Index n);
/// Random diagonal unitary.
Matrix random_diagonal_unitary(Rng& rng, Index n);
/// Gaussian matrix rescaled so that its numerical radius equals `radius`.
Matrix random_with_numerical_radius(Rng& rng, Index n, Real radius);
/// Gaussian matrix rescaled so that its operator norm equals `norm`.
Matrix random_with_norm(Rng& rng, Index n, Real norm);

/// Compression of the pure Gamma-isometry (M_{A + A^* z}, M_z) on
/// H^2_{C^n} to a jointly co-invariant subspace spanned by vectors
/// k_w (x) xi, where k_w is the Szego kernel at w and xi ranges over a
/// subspace of C^n invariant under A^* + conj(w) A. The compression is
/// computed exactly from the Gram matrix of those vectors.
struct KernelPiece {
  Complex point;   // w, |w| < 1
  Matrix xi;       // orthonormal columns spanning an (A^* + conj(w) A)-invariant subspace
};
OperatorPair coinvariant_compression(const Matrix& a, const std::vector<KernelPiece>& pieces);

/// A random Gamma-contraction of dimension <= max_dim built by
/// coinvariant_compression, with w(A) <= 1, kernel points in the disc of
/// radius max_point and each piece either all of C^n or one eigenvector of
/// A^* + conj(w) A.
OperatorPair random_gamma_contraction(Rng& rng, Index max_dim = 4, Real max_point = 0.7);

/// Elementary polynomial inner factor W (I - Q + z Q) with Q an orthogonal
/// projection of the given rank.
SymbolPoly blaschke_potapov_factor(Rng& rng, Index dim, Index rank);

}  // namespace gammaop
