#include "gammaop/gamma_point.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace gammaop {

GammaPoint symmetrize(Complex z1, Complex z2) { return {z1 + z2, z1 * z2}; }

std::pair<Complex, Complex> gamma_roots(const GammaPoint& pt) {
  // Stable quadratic formula: pick the branch of the square root that avoids
  // cancellation, then recover the other root from the product.
  const Complex disc = std::sqrt(pt.s * pt.s - Real(4) * pt.p);
  const Complex plus = pt.s + disc;
  const Complex minus = pt.s - disc;
  const Complex big = (std::abs(plus) >= std::abs(minus) ? plus : minus) / Real(2);
  if (big == Complex(0)) return {Complex(0), Complex(0)};
  const Complex small = pt.p / big;
  return {big, small};
}

bool in_gamma(const GammaPoint& pt, Real tol) {
  if (!std::isfinite(std::abs(pt.s)) || !std::isfinite(std::abs(pt.p))) return false;
  const auto [r1, r2] = gamma_roots(pt);
  return std::abs(r1) <= 1 + tol && std::abs(r2) <= 1 + tol;
}

BetaSolution beta_solve(const GammaPoint& pt, Real tol) {
  // beta = x + i y, p = a + i b:
  //   Re: x (1 + a) + y b = Re s
  //   Im: x b + y (1 - a) = Im s
  const Real a = pt.p.real();
  const Real b = pt.p.imag();
  Eigen::Matrix2d m;
  m << 1 + a, b, b, 1 - a;
  const Eigen::Vector2d rhs(pt.s.real(), pt.s.imag());

  Eigen::Vector2d xy;
  const Real det = 1 - std::norm(pt.p);
  if (std::abs(det) > 1e-12) {
    xy = m.partialPivLu().solve(rhs);
  } else {
    xy = m.completeOrthogonalDecomposition().pseudoInverse() * rhs;
  }
  BetaSolution out;
  out.beta = Complex(xy(0), xy(1));
  out.residual = std::abs(out.beta + pt.p * std::conj(out.beta) - pt.s);
  out.exact = out.residual <= tol;
  return out;
}

bool in_gamma_by_beta(const GammaPoint& pt, Real tol) {
  if (std::abs(pt.p) > 1 + tol) return false;
  const BetaSolution sol = beta_solve(pt, tol);
  return sol.exact && std::abs(sol.beta) <= 1 + tol;
}

std::vector<GammaPoint> boundary_sample(Index n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "boundary_sample: n must be >= 1");
  std::vector<GammaPoint> points;
  points.reserve(static_cast<std::size_t>(n * n));
  for (Index j = 0; j < n; ++j) {
    const Complex z1 = std::polar(Real(1), 2 * std::numbers::pi * Real(j) / Real(n));
    for (Index k = 0; k < n; ++k) {
      const Complex z2 = std::polar(Real(1), 2 * std::numbers::pi * Real(k) / Real(n));
      points.push_back(symmetrize(z1, z2));
    }
  }
  return points;
}

}  // namespace gammaop
