#include "gammaop/blh.hpp"

#include <functional>
#include <numbers>

#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"

namespace gammaop {
namespace {

using RealMatrix = Eigen::MatrixXd;
using LinearMap = std::function<std::vector<Matrix>(const Matrix&)>;

RealVector realify(const std::vector<Matrix>& blocks) {
  Index total = 0;
  for (const auto& b : blocks) total += b.size();
  RealVector out(2 * total);
  Index at = 0;
  for (const auto& b : blocks) {
    for (Index i = 0; i < b.size(); ++i) {
      out(at + i) = b.reshaped()(i).real();
      out(total + at + i) = b.reshaped()(i).imag();
    }
    at += b.size();
  }
  return out;
}

struct RealSolve {
  Matrix x;
  Index kernel_dim = 0;
};

/// Least-squares solution of the real-linear equation map(X) = rhs for an
/// unknown rows x cols complex matrix X.
RealSolve solve_real_linear(const LinearMap& map, Index rows, Index cols, const std::vector<Matrix>& rhs,
                            const Tolerance& tol) {
  const Index unknowns = rows * cols;
  const RealVector target = realify(rhs);
  RealMatrix system(target.size(), 2 * unknowns);
  for (Index idx = 0; idx < unknowns; ++idx) {
    Matrix e = Matrix::Zero(rows, cols);
    e.reshaped()(idx) = 1;
    system.col(idx) = realify(map(e));
    e.reshaped()(idx) = Complex(0, 1);
    system.col(unknowns + idx) = realify(map(e));
  }
  Eigen::BDCSVD<RealMatrix> svd(system, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const Real cutoff = sv.size() > 0 ? tol.rank_tol * sv(0) : 0;
  Index rank = 0;
  RealVector inv(sv.size());
  for (Index i = 0; i < sv.size(); ++i) {
    const bool keep = sv(i) > cutoff && sv(i) > 0;
    inv(i) = keep ? 1 / sv(i) : 0;
    rank += keep ? 1 : 0;
  }
  const RealVector sol = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose() * target;
  RealSolve out;
  out.x = Matrix(rows, cols);
  for (Index idx = 0; idx < unknowns; ++idx) out.x.reshaped()(idx) = Complex(sol(idx), sol(unknowns + idx));
  out.kernel_dim = 2 * unknowns - rank;
  return out;
}

// Coefficients k = 0..deg+1 of (A + A^* z) Theta(z).
std::vector<Matrix> left_side(const Matrix& a, const SymbolPoly& theta) {
  std::vector<Matrix> out;
  for (Index k = 0; k <= theta.degree() + 1; ++k)
    out.push_back(a * theta.coeff_or_zero(k) + a.adjoint() * theta.coeff_or_zero(k - 1));
  return out;
}

// Coefficients k = 0..deg+1 of Theta(z) (B + B^* z).
std::vector<Matrix> right_side(const Matrix& b, const SymbolPoly& theta) {
  std::vector<Matrix> out;
  for (Index k = 0; k <= theta.degree() + 1; ++k)
    out.push_back(theta.coeff_or_zero(k) * b + theta.coeff_or_zero(k - 1) * b.adjoint());
  return out;
}

}  // namespace

Real inner_residual(const SymbolPoly& theta, Index samples) {
  Real worst = 0;
  const Matrix id = Matrix::Identity(theta.dom_dim(), theta.dom_dim());
  for (Index j = 0; j < samples; ++j) {
    const Matrix v = theta.evaluate(std::polar(Real(1), 2 * std::numbers::pi * Real(j) / Real(samples)));
    worst = std::max(worst, op_norm((v.adjoint() * v - id).eval()));
  }
  return worst;
}

BlhProblem::BlhProblem(Matrix a, SymbolPoly th, Index samples) : A(std::move(a)), theta(std::move(th)) {
  if (A.rows() != A.cols() || A.rows() != theta.cod_dim())
    throw Error(ErrorKind::DimensionMismatch, "BlhProblem: A must act on the codomain of Theta");
  inner_residual = gammaop::inner_residual(theta, samples);
}

Real blh_residual(const Matrix& a, const SymbolPoly& theta, const Matrix& b) {
  const auto lhs = left_side(a, theta);
  const auto rhs = right_side(b, theta);
  Real worst = 0;
  for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, op_norm((lhs[k] - rhs[k]).eval()));
  return worst;
}

BlhResult blh_solve(const BlhProblem& prob, const Tolerance& tol) {
  const Index k = prob.theta.dom_dim();
  const auto solved = solve_real_linear([&](const Matrix& b) { return right_side(b, prob.theta); }, k, k,
                                        left_side(prob.A, prob.theta), tol);
  const Real residual = blh_residual(prob.A, prob.theta, solved.x);
  if (residual > tol.residual_tol) return NoSolution{solved.x, residual};
  BlhSolution out;
  out.B = solved.x;
  out.residual = residual;
  out.kernel_dim = solved.kernel_dim;
  out.wB = numerical_radius(out.B).value;
  out.unique = out.kernel_dim == 0 && prob.inner_residual <= 1e-8;
  return out;
}

std::pair<Matrix, Real> blh_solve_for_a(const Matrix& b, const SymbolPoly& theta, const Tolerance& tol) {
  const Index m = theta.cod_dim();
  const auto solved =
      solve_real_linear([&](const Matrix& a) { return left_side(a, theta); }, m, m, right_side(b, theta), tol);
  return {solved.x, blh_residual(solved.x, theta, b)};
}

InvarianceResult invariance_check(const Matrix& a, const SymbolPoly& theta, Index n, const Tolerance& tol) {
  const Index d = theta.degree();
  if (n < d + 1) throw Error(ErrorKind::TruncationTooSmall, "invariance_check: N must be >= deg(Theta) + 1");
  if (a.rows() != theta.cod_dim())
    throw Error(ErrorKind::DimensionMismatch, "invariance_check: A must act on the codomain of Theta");
  const Index k = theta.dom_dim();
  const Matrix t_theta = build_mult_op(theta, n).matrix;
  const Matrix t_pencil = build_mult_op(SymbolPoly::pencil(a), n).matrix;

  // Theta f for deg f <= N - d lies inside degrees 0..N without truncation.
  const Matrix target = range_basis(t_theta.leftCols(k * (n - d + 1)).eval(), tol);
  const Matrix image = t_pencil * t_theta.leftCols(k * (n - d));
  const Matrix outside = image - target * (target.adjoint() * image);

  InvarianceResult out;
  out.residual = op_norm(outside);
  out.invariant = out.residual <= tol.residual_tol;
  return out;
}

}  // namespace gammaop
