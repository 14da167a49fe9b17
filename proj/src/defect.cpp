#include "gammaop/defect.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gammaop/linalg.hpp"

namespace gammaop {

void require_contraction(const Matrix& p, const Tolerance& tol) {
  if (p.rows() != p.cols()) throw Error(ErrorKind::DimensionMismatch, "contraction must be square");
  const Real norm = op_norm(p);
  if (norm > 1 + tol.rank_tol) {
    std::ostringstream msg;
    msg << "||P|| = " << norm << " exceeds 1";
    throw Error(ErrorKind::NotAContraction, msg.str());
  }
}

DefectData defect_data(const Matrix& p, const Tolerance& tol) {
  require_contraction(p, tol);
  const Matrix id = Matrix::Identity(p.rows(), p.cols());
  DefectData d;
  d.D_P = psd_sqrt(id - p.adjoint() * p, tol);
  d.D_Pstar = psd_sqrt(id - p * p.adjoint(), tol);
  d.Q_dP = range_basis(d.D_P, tol);
  d.Q_dPstar = range_basis(d.D_Pstar, tol);
  return d;
}

void require_cnu(const Matrix& p, const Tolerance& tol) {
  require_contraction(p, tol);
  if (p.size() == 0) return;
  Eigen::ComplexEigenSolver<Matrix> es(p);
  const DefectData d = defect_data(p, tol);
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Complex lambda = es.eigenvalues()(i);
    if (std::abs(lambda) >= 1 - 1e-9) {
      const Vector x = es.eigenvectors().col(i).normalized();
      std::ostringstream msg;
      msg << "eigenvalue " << lambda << " lies on the unit circle (||D_P x|| = " << (d.D_P * x).norm()
          << "); split off the unitary part first";
      throw Error(ErrorKind::NotCnu, msg.str());
    }
  }
}

CharFn theta_taylor(const Matrix& p, Index k, const Tolerance& tol) {
  require_cnu(p, tol);
  CharFn out;
  out.source_P = p;
  out.defect = defect_data(p, tol);
  out.degree_used = k;
  const DefectData& d = out.defect;

  std::vector<Matrix> c;
  c.reserve(static_cast<std::size_t>(k + 1));
  c.push_back(-(d.Q_dPstar.adjoint() * p * d.Q_dP));
  const Matrix left = d.Q_dPstar.adjoint() * d.D_Pstar;
  Matrix right = d.D_P * d.Q_dP;  // P^{*(j-1)} D_P Q
  for (Index j = 1; j <= k; ++j) {
    c.push_back(left * right);
    right = (p.adjoint() * right).eval();
  }
  out.taylor = SymbolPoly(std::move(c));
  return out;
}

Matrix theta_eval(const CharFn& theta, Complex z) {
  const Matrix& p = theta.source_P;
  const DefectData& d = theta.defect;
  const Index n = p.rows();
  const Matrix resolvent_arg = Matrix::Identity(n, n) - z * p.adjoint();
  Eigen::FullPivLU<Matrix> lu(resolvent_arg);
  if (!lu.isInvertible() || lu.rcond() < 1e-14) {
    std::ostringstream msg;
    msg << "I - z P^* is singular at z = " << z;
    throw Error(ErrorKind::ResolventSingular, msg.str());
  }
  const Matrix inner = -p + z * d.D_Pstar * lu.solve(d.D_P);
  return d.Q_dPstar.adjoint() * inner * d.Q_dP;
}

Matrix delta_eval(const CharFn& theta, Real t, const Tolerance& tol) {
  const Matrix th = theta_eval(theta, std::polar(Real(1), t));
  const Matrix id = Matrix::Identity(th.cols(), th.cols());
  return psd_sqrt(id - th.adjoint() * th, tol);
}

Real max_delta_norm(const CharFn& theta, Index samples, const Tolerance& tol) {
  Real worst = 0;
  for (Index j = 0; j < samples; ++j) {
    const Real t = 2 * std::numbers::pi * Real(j) / Real(samples);
    worst = std::max(worst, op_norm(delta_eval(theta, t, tol)));
  }
  return worst;
}

Matrix x_limit(const Matrix& p, const Tolerance& tol, Index max_iterations) {
  require_contraction(p, tol);
  Matrix m = Matrix::Identity(p.rows(), p.cols());
  Real delta = 0;
  for (Index it = 0; it < max_iterations; ++it) {
    Matrix next = p * m * p.adjoint();
    delta = op_norm((next - m).eval());
    m = std::move(next);
    if (delta <= tol.convergence_tol) return psd_sqrt(m, tol);
  }
  std::ostringstream msg;
  msg << "x_limit did not converge after " << max_iterations << " iterations (last delta " << delta << ")";
  throw Error(ErrorKind::NonConvergence, msg.str());
}

Real truncation_error(const Matrix& p, Index n) {
  Matrix power = Matrix::Identity(p.rows(), p.cols());
  for (Index k = 0; k <= n; ++k) power = (power * p).eval();
  return op_norm(power);
}

Index default_truncation(const Matrix& p) {
  constexpr Index kMin = 32;
  constexpr Index kMax = 4096;
  constexpr Real kTarget = 1e-10;
  const Real rho = spectral_radius(p);
  Matrix power = p;  // P^{N+1} with N = 0
  for (Index n = 0; n <= kMax; ++n) {
    if (n >= kMin && op_norm(power) <= kTarget && std::pow(rho, Real(n + 1)) <= kTarget) return n;
    power = (power * p).eval();
  }
  throw Error(ErrorKind::TruncationTooSmall, "default_truncation: ||P^{N+1}|| does not decay below 1e-10");
}

Matrix pi_nf_matrix(const Matrix& p, Index n, const Tolerance& tol) {
  require_cnu(p, tol);
  const DefectData d = defect_data(p, tol);
  const Index b = d.rank_dPstar();
  Matrix out(b * (n + 1), p.cols());
  Matrix row = d.Q_dPstar.adjoint() * d.D_Pstar;  // Q_*^* D_{P^*} P^{*k}
  for (Index k = 0; k <= n; ++k) {
    out.middleRows(k * b, b) = row;
    row = (row * p.adjoint()).eval();
  }
  return out;
}

Vector pi_nf_embed(const Matrix& p, Index n, const Vector& h, const Tolerance& tol) {
  if (h.size() != p.cols()) throw Error(ErrorKind::DimensionMismatch, "pi_nf_embed: vector size mismatch");
  return pi_nf_matrix(p, n, tol) * h;
}

ModelSpace build_model_space(const Matrix& p, Index n, const Tolerance& tol) {
  if (n < 1) throw Error(ErrorKind::TruncationTooSmall, "build_model_space: N must be >= 1");
  ModelSpace out;
  out.n = n;
  out.theta = theta_taylor(p, n, tol);
  out.block = out.theta.defect.rank_dPstar();
  out.trunc_error = truncation_error(p, n);
  if (out.trunc_error >= 0.5) {
    std::ostringstream msg;
    msg << "build_model_space: ||P^{N+1}|| = " << out.trunc_error << " at N = " << n;
    throw Error(ErrorKind::TruncationTooSmall, msg.str());
  }
  out.delta_norm = max_delta_norm(out.theta, 256, tol);
  if (out.delta_norm > 1e-7) {
    std::ostringstream msg;
    msg << "build_model_space: Delta_P does not vanish (max norm " << out.delta_norm << ")";
    throw Error(ErrorKind::ResidualTooLarge, msg.str());
  }

  const Matrix t = build_mult_op(out.theta.taylor, n).matrix;
  const Matrix gap = Matrix::Identity(t.rows(), t.rows()) - t * t.adjoint();
  out.basis = range_basis(((gap + gap.adjoint()) / Real(2)).eval(), tol);
  return out;
}

}  // namespace gammaop
