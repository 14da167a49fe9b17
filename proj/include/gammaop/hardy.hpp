#pragma once

// Truncated vector-valued Hardy space H^2_E on degrees 0..N and truncated
// L^2 on Fourier modes -N..N. Coordinates are degree-major: the block for
// degree k occupies rows [k * block, (k + 1) * block).

#include <vector>

#include "gammaop/operator_pair.hpp"
#include "gammaop/types.hpp"

namespace gammaop {

/// Matrix polynomial sum_k C_k z^k with all C_k of size cod x dom.
class SymbolPoly {
 public:
  SymbolPoly() = default;
  explicit SymbolPoly(std::vector<Matrix> coeffs);

  /// A + A^* z.
  static SymbolPoly pencil(const Matrix& a);
  /// z^power times the identity on C^dim.
  static SymbolPoly monomial(Index dim, Index power);
  static SymbolPoly constant(const Matrix& c);

  Index degree() const { return static_cast<Index>(coeffs_.size()) - 1; }
  Index dom_dim() const { return dom_; }
  Index cod_dim() const { return cod_; }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }
  const Matrix& coeff(Index k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  /// C_k, or the zero block when k is outside 0..degree.
  Matrix coeff_or_zero(Index k) const;
  Matrix evaluate(Complex z) const;

 private:
  std::vector<Matrix> coeffs_;
  Index dom_ = 0;
  Index cod_ = 0;
};

/// Polynomial product (phi psi)(z) = phi(z) psi(z).
SymbolPoly operator*(const SymbolPoly& phi, const SymbolPoly& psi);

/// Operator on a truncated Hardy or Fourier space.
struct TruncatedOp {
  Matrix matrix;
  Index dom_block = 0;
  Index cod_block = 0;
  Index degree_lo = 0;
  Index degree_hi = 0;
  Index interior_hi = 0;

  Index degrees() const { return degree_hi - degree_lo + 1; }
  /// Number of leading domain coordinates with degree <= interior_hi.
  Index interior_cols() const { return dom_block * (interior_hi - degree_lo + 1); }
};

/// Lower block-triangular block-Toeplitz matrix of M_phi on degrees 0..N.
/// interior_hi = N - deg(phi).
TruncatedOp build_mult_op(const SymbolPoly& phi, Index n);

/// M_z on H^2_{C^dim} truncated to degrees 0..N.
TruncatedOp shift_op(Index dim, Index n);

/// The cyclic shift on Fourier modes -N..N with block size `dim`: the
/// multiplication by e^{it} on L^2 sampled at 2N + 1 equispaced points, which
/// is exactly unitary.
TruncatedOp circle_shift(Index dim, Index n);

/// (M_{A + A^* z}, M_z) truncated to degrees 0..N, with window degrees
/// 0..N-1.
OperatorPair gamma_isometry_model(const Matrix& a, Index n);

/// Q^* T Q for a basis Q with orthonormal columns.
Matrix compress(const Matrix& op, const Matrix& basis);
Matrix compress(const TruncatedOp& op, const Matrix& basis);

/// P_C (x) A: A in the degree-0 diagonal block, zero elsewhere.
Matrix pc_tensor(const Matrix& a, Index n);

/// Block (i, j) of a degree-major matrix with block sizes rb x cb.
template <typename M>
auto block_at(M&& m, Index i, Index j, Index rb, Index cb) {
  return m.block(i * rb, j * cb, rb, cb);
}

}  // namespace gammaop
