#include "gammaop/numrad.hpp"

#include <cmath>
#include <numbers>

namespace gammaop {
namespace {

struct TopEigen {
  Real value;
  Vector vector;
};

TopEigen top_of_real_part(const Matrix& a, Real theta) {
  const Complex rot = std::polar(Real(1), theta);
  const Matrix h = (rot * a + std::conj(rot) * a.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Index last = h.rows() - 1;
  return {es.eigenvalues()(last), es.eigenvectors().col(last)};
}

}  // namespace

NumRadResult numerical_radius(const Matrix& a, const NumRadOptions& opts) {
  if (a.rows() != a.cols())
    throw Error(ErrorKind::DimensionMismatch, "numerical_radius: matrix must be square");
  NumRadResult out;
  if (a.size() == 0) return out;

  const Real two_pi = 2 * std::numbers::pi;
  const Real step = two_pi / Real(opts.grid);
  Index best = 0;
  Real best_value = -1;
  for (Index j = 0; j < opts.grid; ++j) {
    const Real v = top_of_real_part(a, step * Real(j)).value;
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }

  // Golden-section maximisation on [theta_{best-1}, theta_{best+1}].
  const Real inv_phi = (std::sqrt(Real(5)) - 1) / 2;
  Real lo = step * Real(best - 1);
  Real hi = step * Real(best + 1);
  Real x1 = hi - inv_phi * (hi - lo);
  Real x2 = lo + inv_phi * (hi - lo);
  Real f1 = top_of_real_part(a, x1).value;
  Real f2 = top_of_real_part(a, x2).value;
  while (hi - lo > opts.angle_tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = top_of_real_part(a, x2).value;
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = top_of_real_part(a, x1).value;
    }
  }

  Real theta = step * Real(best);
  TopEigen top = top_of_real_part(a, theta);
  const Real mid = (lo + hi) / 2;
  TopEigen refined = top_of_real_part(a, mid);
  if (refined.value > top.value) {
    theta = mid;
    top = std::move(refined);
  }
  theta = std::fmod(theta, two_pi);
  if (theta < 0) theta += two_pi;

  out.value = std::max<Real>(top.value, 0);
  out.argmax_angle = theta;
  out.certificate = top.vector.normalized();
  return out;
}

bool numerical_radius_at_most_one(const Matrix& a, const Tolerance& tol) {
  return numerical_radius(a).value <= 1 + tol.wr_slack;
}

}  // namespace gammaop
