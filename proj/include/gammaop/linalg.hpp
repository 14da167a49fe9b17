#pragma once

// Dense spectral helpers shared by every module. All routines are templated
// on the Eigen expression type so they accept blocks, maps and products, and
// they work for real as well as complex scalars.

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Dense>

#include "gammaop/types.hpp"

// The decompositions are instantiated once, in linalg.cpp.
extern template class Eigen::BDCSVD<Eigen::MatrixXcd>;
extern template class Eigen::BDCSVD<Eigen::MatrixXd>;
extern template class Eigen::JacobiSVD<Eigen::MatrixXcd>;
extern template class Eigen::JacobiSVD<Eigen::MatrixXd>;
extern template class Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>;
extern template class Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>;
extern template class Eigen::ComplexEigenSolver<Eigen::MatrixXcd>;
extern template class Eigen::FullPivLU<Eigen::MatrixXcd>;
extern template class Eigen::FullPivLU<Eigen::MatrixXd>;
extern template class Eigen::PartialPivLU<Eigen::MatrixXcd>;
extern template class Eigen::HouseholderQR<Eigen::MatrixXcd>;
extern template class Eigen::LLT<Eigen::MatrixXcd>;

namespace gammaop {

template <typename Derived>
using PlainMatrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Spectral (operator 2-) norm. Empty matrices have norm 0.
template <typename Derived>
typename Derived::RealScalar op_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<PlainMatrix<Derived>> svd(m.eval());
  return svd.singularValues()(0);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// Largest eigenvalue modulus.
template <typename Derived>
typename Derived::RealScalar spectral_radius(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  using C = std::complex<typename Derived::RealScalar>;
  Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic> mc = m.template cast<C>();
  Eigen::ComplexEigenSolver<decltype(mc)> es(mc, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

/// Rotates every column so that its largest-magnitude entry is real and
/// positive. The first entry within a relative 1e-12 of the maximum wins.
template <typename Derived>
void normalize_column_phases(Eigen::MatrixBase<Derived>& q) {
  using RealScalar = typename Derived::RealScalar;
  for (Index j = 0; j < q.cols(); ++j) {
    auto col = q.col(j);
    const RealScalar peak = col.cwiseAbs().maxCoeff();
    if (peak == RealScalar(0)) continue;
    Index pivot = 0;
    for (Index i = 0; i < col.size(); ++i) {
      if (std::abs(col(i)) >= peak * (1 - RealScalar(1e-12))) {
        pivot = i;
        break;
      }
    }
    const auto phase = col(pivot) / std::abs(col(pivot));
    col *= std::conj(phase);
    col(pivot) = std::abs(col(pivot));
  }
}

/// Hermitian positive square root. Eigenvalues within rank_tol * max(1, ||M||)
/// of zero are set to zero, so round-off such as I - U^*U for unitary U gives
/// an exactly zero root instead of one of size 1e-8.
template <typename Derived>
PlainMatrix<Derived> psd_sqrt(const Eigen::MatrixBase<Derived>& m, const Tolerance& tol = {}) {
  using Mat = PlainMatrix<Derived>;
  using RealScalar = typename Derived::RealScalar;
  if (m.rows() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, "psd_sqrt: matrix must be square");
  if (m.size() == 0) return Mat(0, 0);
  const Mat a = m.eval();
  const RealScalar scale = std::max<RealScalar>(1, op_norm(a));
  const RealScalar skew = op_norm((a - a.adjoint()).eval());
  if (skew > tol.rank_tol * scale) {
    std::ostringstream msg;
    msg << "psd_sqrt: ||M - M*|| = " << skew << " exceeds tolerance";
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  const Mat h = (a + a.adjoint()) / RealScalar(2);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  auto evals = es.eigenvalues().eval();
  if (evals.size() > 0 && evals.minCoeff() < -tol.rank_tol * scale) {
    std::ostringstream msg;
    msg << "psd_sqrt: eigenvalue " << evals.minCoeff() << " is negative beyond tolerance";
    throw Error(ErrorKind::IndefiniteInput, msg.str());
  }
  const RealScalar floor = tol.rank_tol * scale;
  evals = evals.unaryExpr([floor](RealScalar x) { return x <= floor ? RealScalar(0) : std::sqrt(x); });
  Mat root = es.eigenvectors() * evals.asDiagonal() * es.eigenvectors().adjoint();
  return (root + root.adjoint()) / RealScalar(2);
}

/// Orthonormal basis of the column space, keeping singular directions above
/// rank_tol * sigma_max. Columns follow the phase convention of
/// normalize_column_phases.
template <typename Derived>
PlainMatrix<Derived> range_basis(const Eigen::MatrixBase<Derived>& m, const Tolerance& tol = {}) {
  using Mat = PlainMatrix<Derived>;
  if (m.size() == 0) return Mat(m.rows(), 0);
  Eigen::BDCSVD<Mat> svd(m.eval(), Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  if (sv(0) > 0) {
    const auto cutoff = tol.rank_tol * sv(0);
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  }
  Mat q = svd.matrixU().leftCols(rank);
  normalize_column_phases(q);
  return q;
}

/// Moore-Penrose pseudo-inverse with relative rank cutoff.
template <typename Derived>
PlainMatrix<Derived> pinv(const Eigen::MatrixBase<Derived>& m, const Tolerance& tol = {}) {
  using Mat = PlainMatrix<Derived>;
  if (m.size() == 0) return Mat::Zero(m.cols(), m.rows());
  Eigen::BDCSVD<Mat> svd(m.eval(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const auto cutoff = tol.rank_tol * sv(0);
  auto inv = sv.eval();
  for (Index i = 0; i < inv.size(); ++i) inv(i) = (sv(i) > cutoff && sv(i) > 0) ? 1 / sv(i) : 0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

template <typename Scalar>
struct SandwichSolution {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> X;
  typename Eigen::NumTraits<Scalar>::Real residual;
};

/// Minimal-Frobenius-norm least-squares solution of L X R = C, namely
/// X = L^+ C R^+. The residual ||L X R - C|| is returned, not judged.
template <typename DL, typename DR, typename DC>
SandwichSolution<typename DC::Scalar> sandwich_solve(const Eigen::MatrixBase<DL>& l,
                                                     const Eigen::MatrixBase<DR>& r,
                                                     const Eigen::MatrixBase<DC>& c,
                                                     const Tolerance& tol = {}) {
  if (l.rows() != c.rows() || r.cols() != c.cols())
    throw Error(ErrorKind::DimensionMismatch, "sandwich_solve: L X R and C are not conformal");
  PlainMatrix<DC> x = pinv(l, tol) * c * pinv(r, tol);
  const auto residual = op_norm((l * x * r - c).eval());
  return {std::move(x), residual};
}

/// Columns of `m` whose indices fall in [0, count).
template <typename Derived>
auto leading_cols(const Eigen::MatrixBase<Derived>& m, Index count) {
  return m.leftCols(std::min<Index>(count, m.cols()));
}

}  // namespace gammaop
