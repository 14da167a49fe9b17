#include "gammaop/hardy.hpp"

#include "gammaop/linalg.hpp"

namespace gammaop {

SymbolPoly::SymbolPoly(std::vector<Matrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "SymbolPoly: needs at least one coefficient");
  cod_ = coeffs_.front().rows();
  dom_ = coeffs_.front().cols();
  for (const auto& c : coeffs_) {
    if (c.rows() != cod_ || c.cols() != dom_)
      throw Error(ErrorKind::DimensionMismatch, "SymbolPoly: coefficients differ in shape");
  }
}

SymbolPoly SymbolPoly::pencil(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "pencil: A must be square");
  return SymbolPoly({a, a.adjoint()});
}

SymbolPoly SymbolPoly::monomial(Index dim, Index power) {
  std::vector<Matrix> c(static_cast<std::size_t>(power + 1), Matrix::Zero(dim, dim));
  c.back() = Matrix::Identity(dim, dim);
  return SymbolPoly(std::move(c));
}

SymbolPoly SymbolPoly::constant(const Matrix& c) { return SymbolPoly({c}); }

Matrix SymbolPoly::coeff_or_zero(Index k) const {
  if (k < 0 || k > degree()) return Matrix::Zero(cod_, dom_);
  return coeff(k);
}

Matrix SymbolPoly::evaluate(Complex z) const {
  // Horner
  Matrix acc = coeffs_.back();
  for (Index k = degree() - 1; k >= 0; --k) acc = (acc * z + coeff(k)).eval();
  return acc;
}

SymbolPoly operator*(const SymbolPoly& phi, const SymbolPoly& psi) {
  if (phi.dom_dim() != psi.cod_dim())
    throw Error(ErrorKind::DimensionMismatch, "SymbolPoly product: inner dimensions differ");
  const Index deg = phi.degree() + psi.degree();
  std::vector<Matrix> c(static_cast<std::size_t>(deg + 1), Matrix::Zero(phi.cod_dim(), psi.dom_dim()));
  for (Index i = 0; i <= phi.degree(); ++i)
    for (Index j = 0; j <= psi.degree(); ++j) c[static_cast<std::size_t>(i + j)] += phi.coeff(i) * psi.coeff(j);
  return SymbolPoly(std::move(c));
}

TruncatedOp build_mult_op(const SymbolPoly& phi, Index n) {
  if (n < phi.degree())
    throw Error(ErrorKind::TruncationTooSmall, "build_mult_op: N must be at least deg(phi)");
  const Index rb = phi.cod_dim();
  const Index cb = phi.dom_dim();
  TruncatedOp op;
  op.matrix = Matrix::Zero(rb * (n + 1), cb * (n + 1));
  op.dom_block = cb;
  op.cod_block = rb;
  op.degree_lo = 0;
  op.degree_hi = n;
  op.interior_hi = n - phi.degree();
  for (Index j = 0; j <= n; ++j)
    for (Index k = 0; k <= phi.degree() && j + k <= n; ++k) block_at(op.matrix, j + k, j, rb, cb) = phi.coeff(k);
  return op;
}

TruncatedOp shift_op(Index dim, Index n) { return build_mult_op(SymbolPoly::monomial(dim, 1), n); }

TruncatedOp circle_shift(Index dim, Index n) {
  const Index modes = 2 * n + 1;
  TruncatedOp op;
  op.matrix = Matrix::Zero(dim * modes, dim * modes);
  op.dom_block = dim;
  op.cod_block = dim;
  op.degree_lo = -n;
  op.degree_hi = n;
  op.interior_hi = n - 1;
  for (Index j = 0; j < modes; ++j) block_at(op.matrix, (j + 1) % modes, j, dim, dim) = Matrix::Identity(dim, dim);
  return op;
}

OperatorPair gamma_isometry_model(const Matrix& a, Index n) {
  if (n < 1) throw Error(ErrorKind::TruncationTooSmall, "gamma_isometry_model: N must be >= 1");
  TruncatedOp s = build_mult_op(SymbolPoly::pencil(a), n);
  TruncatedOp p = shift_op(a.rows(), n);
  return make_operator_pair(std::move(s.matrix), std::move(p.matrix), a.rows() * n);
}

Matrix compress(const Matrix& op, const Matrix& basis) {
  if (op.rows() != op.cols() || basis.rows() != op.rows())
    throw Error(ErrorKind::DimensionMismatch, "compress: basis does not match operator dimension");
  return basis.adjoint() * op * basis;
}

Matrix compress(const TruncatedOp& op, const Matrix& basis) { return compress(op.matrix, basis); }

Matrix pc_tensor(const Matrix& a, Index n) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "pc_tensor: A must be square");
  const Index b = a.rows();
  Matrix out = Matrix::Zero(b * (n + 1), b * (n + 1));
  out.topLeftCorner(b, b) = a;
  return out;
}

}  // namespace gammaop
