#include "gammaop/classify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gammaop/defect.hpp"
#include "gammaop/gamma_point.hpp"
#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"
#include "gammaop/random.hpp"

namespace gammaop {

std::string_view to_string(GammaKind kind) {
  switch (kind) {
    case GammaKind::GammaUnitary: return "GammaUnitary";
    case GammaKind::GammaIsometry: return "GammaIsometry";
    case GammaKind::GammaContraction: return "GammaContraction";
    case GammaKind::NotGamma: return "NotGamma";
    case GammaKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

namespace {

NamedCheck check_at_most(std::string name, Real value, Real threshold) {
  return {std::move(name), value <= threshold, value, threshold};
}

bool all_passed(const std::vector<NamedCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Real commutator_threshold(const OperatorPair& pair, const Tolerance& tol) {
  return tol.residual_tol * std::max<Real>(1, op_norm(pair.S) * op_norm(pair.P));
}

}  // namespace

void require_commuting(const OperatorPair& pair, const Tolerance& tol) {
  const Real threshold = commutator_threshold(pair, tol);
  if (pair.commutator_norm > threshold) {
    std::ostringstream msg;
    msg << "||SP - PS|| = " << pair.commutator_norm << " exceeds " << threshold;
    throw Error(ErrorKind::NotCommuting, msg.str());
  }
}

PredicateReport is_gamma_unitary(const OperatorPair& pair, const Tolerance& tol) {
  require_commuting(pair, tol);
  const Matrix id = Matrix::Identity(pair.dim(), pair.dim());
  PredicateReport r;
  r.checks.push_back(check_at_most("P*P = I", op_norm((pair.P.adjoint() * pair.P - id).eval()), tol.residual_tol));
  r.checks.push_back(check_at_most("PP* = I", op_norm((pair.P * pair.P.adjoint() - id).eval()), tol.residual_tol));
  r.checks.push_back(check_at_most("S = S*P", op_norm((pair.S - pair.S.adjoint() * pair.P).eval()), tol.residual_tol));
  r.checks.push_back(check_at_most("||S|| <= 2", op_norm(pair.S), 2 + tol.residual_tol));
  r.holds = all_passed(r.checks);
  return r;
}

PredicateReport is_gamma_isometry(const OperatorPair& pair, const Tolerance& tol) {
  require_commuting(pair, tol);
  const Matrix id = Matrix::Identity(pair.dim(), pair.dim());
  PredicateReport r;
  r.checks.push_back(check_at_most(
      "P*P = I", op_norm(window_cols(pair.P.adjoint() * pair.P - id, pair.window)), tol.residual_tol));
  r.checks.push_back(check_at_most(
      "S = S*P", op_norm(window_cols(pair.S - pair.S.adjoint() * pair.P, pair.window)), tol.residual_tol));
  r.checks.push_back(check_at_most("||S|| <= 2", op_norm(pair.S), 2 + tol.residual_tol));
  r.holds = all_passed(r.checks);
  return r;
}

FundamentalOp fundamental_op(const OperatorPair& pair, const Tolerance& tol) {
  const DefectData d = defect_data(pair.P, tol);
  const Matrix rhs = pair.S - pair.S.adjoint() * pair.P;
  const auto sol = sandwich_solve(d.D_P, d.D_P, rhs, tol);
  FundamentalOp out;
  out.F = d.Q_dP.adjoint() * sol.X * d.Q_dP;
  out.basis = d.Q_dP;
  out.residual = sol.residual;
  return out;
}

ClassificationReport is_gamma_contraction(const OperatorPair& pair, const Tolerance& tol) {
  require_commuting(pair, tol);
  ClassificationReport r;
  r.checks.push_back(check_at_most("commuting", pair.commutator_norm, commutator_threshold(pair, tol)));
  const Real p_norm = op_norm(pair.P);
  r.checks.push_back(check_at_most("||P|| <= 1", p_norm, 1 + tol.rank_tol));
  r.checks.push_back(check_at_most("||S|| <= 2", op_norm(pair.S), 2 + tol.residual_tol));
  if (p_norm > 1 + tol.rank_tol) {
    r.kind = GammaKind::NotGamma;
    return r;
  }

  const FundamentalOp f = fundamental_op(pair, tol);
  r.fundamental_residual = f.residual;
  r.wA = numerical_radius(f.F).value;
  r.fundamental_op = f.F;
  r.checks.push_back(check_at_most("S - S*P = D_P F D_P", f.residual, tol.residual_tol));
  r.checks.push_back(check_at_most("w(F) <= 1", r.wA, 1 + tol.wr_slack));

  if (all_passed(r.checks)) {
    r.kind = GammaKind::GammaContraction;
  } else {
    bool only_wr_failed = true;
    for (std::size_t i = 0; i + 1 < r.checks.size(); ++i) only_wr_failed = only_wr_failed && r.checks[i].passed;
    r.kind = (only_wr_failed && r.wA <= 1 + tol.wr_slack + 1e-6) ? GammaKind::Inconclusive : GammaKind::NotGamma;
  }
  return r;
}

ClassificationReport classify(const OperatorPair& pair, const Tolerance& tol) {
  ClassificationReport r = is_gamma_contraction(pair, tol);
  if (r.kind != GammaKind::GammaContraction) return r;
  const PredicateReport unitary = is_gamma_unitary(pair, tol);
  const PredicateReport isometry = is_gamma_isometry(pair, tol);
  for (const auto& c : unitary.checks) r.checks.push_back({"unitary: " + c.name, c.passed, c.value, c.threshold});
  for (const auto& c : isometry.checks) r.checks.push_back({"isometry: " + c.name, c.passed, c.value, c.threshold});
  if (unitary.holds)
    r.kind = GammaKind::GammaUnitary;
  else if (isometry.holds)
    r.kind = GammaKind::GammaIsometry;
  return r;
}

Matrix recover_pure_symbol(const OperatorPair& pair, Index n, Real tol) {
  if (n < 1 || pair.dim() % (n + 1) != 0)
    throw Error(ErrorKind::DimensionMismatch, "recover_pure_symbol: dimension is not a multiple of N + 1");
  const Index b = pair.dim() / (n + 1);
  const Matrix diff = pair.S.adjoint() - pair.S * pair.P.adjoint();
  Real off = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != 0 || j != 0) off = std::max(off, op_norm(diff.block(i * b, j * b, b, b)));
  if (off > tol) {
    std::ostringstream msg;
    msg << "S* - SP* has off-corner block of norm " << off;
    throw Error(ErrorKind::NotPureModelForm, msg.str());
  }
  return diff.topLeftCorner(b, b).adjoint();
}

// Von Neumann sampling

BivariatePoly BivariatePoly::constant(Complex c) { return monomial(0, 0, c); }

BivariatePoly BivariatePoly::monomial(Index a, Index b, Complex c) {
  BivariatePoly q;
  q.degree = a + b;
  q.coeffs = Matrix::Zero(q.degree + 1, q.degree + 1);
  q.coeffs(a, b) = c;
  return q;
}

Complex BivariatePoly::evaluate(Complex s, Complex p) const {
  Complex acc = 0;
  Complex sa = 1;
  for (Index a = 0; a <= degree; ++a) {
    Complex pb = 1;
    for (Index b = 0; a + b <= degree; ++b) {
      acc += coeffs(a, b) * sa * pb;
      pb *= p;
    }
    sa *= s;
  }
  return acc;
}

Matrix BivariatePoly::evaluate(const Matrix& s, const Matrix& p) const {
  const Index n = s.rows();
  std::vector<Matrix> p_pow{Matrix::Identity(n, n)};
  for (Index b = 1; b <= degree; ++b) p_pow.push_back(p_pow.back() * p);
  Matrix acc = Matrix::Zero(n, n);
  Matrix sa = Matrix::Identity(n, n);
  for (Index a = 0; a <= degree; ++a) {
    for (Index b = 0; a + b <= degree; ++b)
      if (coeffs(a, b) != Complex(0)) acc += coeffs(a, b) * sa * p_pow[static_cast<std::size_t>(b)];
    sa = (sa * s).eval();
  }
  return acc;
}

Real boundary_sup(const BivariatePoly& poly, Index grid) {
  const Real step = 2 * std::numbers::pi / Real(grid);
  auto value_at = [&](Real t1, Real t2) {
    const GammaPoint pt = symmetrize(std::polar(Real(1), t1), std::polar(Real(1), t2));
    return std::abs(poly.evaluate(pt.s, pt.p));
  };
  Real best = -1;
  Real b1 = 0;
  Real b2 = 0;
  for (Index j = 0; j < grid; ++j)
    for (Index k = 0; k < grid; ++k) {
      const Real v = value_at(step * Real(j), step * Real(k));
      if (v > best) {
        best = v;
        b1 = step * Real(j);
        b2 = step * Real(k);
      }
    }
  // Shrinking local grids around the incumbent.
  Real radius = step;
  for (int round = 0; round < 12; ++round) {
    const Real c1 = b1;
    const Real c2 = b2;
    for (int j = -4; j <= 4; ++j)
      for (int k = -4; k <= 4; ++k) {
        const Real t1 = c1 + radius * Real(j) / 4;
        const Real t2 = c2 + radius * Real(k) / 4;
        const Real v = value_at(t1, t2);
        if (v > best) {
          best = v;
          b1 = t1;
          b2 = t2;
        }
      }
    radius /= 3;
  }
  return best;
}

Real margin_for(const OperatorPair& pair, const BivariatePoly& poly, Index grid) {
  return boundary_sup(poly, grid) - op_norm(poly.evaluate(pair.S, pair.P));
}

MarginResult von_neumann_margin(const OperatorPair& pair, Index degree, Index trials, Index grid,
                                std::uint64_t seed, const Tolerance& tol) {
  require_commuting(pair, tol);
  Rng rng(seed);
  MarginResult out;
  out.min_margin = std::numeric_limits<Real>::infinity();
  for (Index t = 0; t < trials; ++t) {
    BivariatePoly q;
    q.degree = degree;
    q.coeffs = Matrix::Zero(degree + 1, degree + 1);
    for (Index a = 0; a <= degree; ++a)
      for (Index b = 0; a + b <= degree; ++b) q.coeffs(a, b) = rng.complex_box();
    const Real m = margin_for(pair, q, grid);
    if (m < out.min_margin) {
      out.min_margin = m;
      out.witness = q;
    }
  }
  return out;
}

}  // namespace gammaop
