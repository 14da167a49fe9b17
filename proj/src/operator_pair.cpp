#include "gammaop/operator_pair.hpp"

#include "gammaop/linalg.hpp"

namespace gammaop {

Matrix window_cols(const Matrix& m, const std::optional<Index>& window) {
  if (!window) return m;
  return m.leftCols(std::min(*window, m.cols()));
}

OperatorPair make_operator_pair(Matrix s, Matrix p, std::optional<Index> window) {
  if (s.rows() != s.cols() || p.rows() != p.cols() || s.rows() != p.rows())
    throw Error(ErrorKind::DimensionMismatch, "operator pair: S and P must be square of equal size");
  if (!s.allFinite() || !p.allFinite()) throw Error(ErrorKind::InvalidArgument, "operator pair: non-finite entries");
  OperatorPair pair{std::move(s), std::move(p), 0, window};
  pair.commutator_norm = op_norm(window_cols(pair.S * pair.P - pair.P * pair.S, window));
  return pair;
}

OperatorPair adjoint_pair(const OperatorPair& pair) {
  return make_operator_pair(pair.S.adjoint(), pair.P.adjoint());
}

OperatorPair conjugate_pair(const OperatorPair& pair, const Matrix& u) {
  return make_operator_pair(u * pair.S * u.adjoint(), u * pair.P * u.adjoint());
}

OperatorPair direct_sum(const OperatorPair& a, const OperatorPair& b) {
  const Index n = a.dim() + b.dim();
  Matrix s = Matrix::Zero(n, n);
  Matrix p = Matrix::Zero(n, n);
  s.topLeftCorner(a.dim(), a.dim()) = a.S;
  s.bottomRightCorner(b.dim(), b.dim()) = b.S;
  p.topLeftCorner(a.dim(), a.dim()) = a.P;
  p.bottomRightCorner(b.dim(), b.dim()) = b.P;
  return make_operator_pair(std::move(s), std::move(p));
}

}  // namespace gammaop
