#include "gammaop/suite.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "gammaop/blh.hpp"
#include "gammaop/classify.hpp"
#include "gammaop/defect.hpp"
#include "gammaop/dilation.hpp"
#include "gammaop/equivalence.hpp"
#include "gammaop/gamma_point.hpp"
#include "gammaop/generators.hpp"
#include "gammaop/hardy.hpp"
#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"
#include "gammaop/operator_pair.hpp"
#include "gammaop/random.hpp"

namespace gammaop {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

Rng criterion_rng(const SuiteOptions& opts, int id) {
  return Rng(opts.seed ^ (kGolden * static_cast<std::uint64_t>(id + 1)));
}

// Small printf-free formatter for detail lines.
class Detail {
 public:
  template <typename T>
  Detail& operator<<(const T& v) {
    out_ << v;
    return *this;
  }
  Detail& sci(Real v) {
    out_ << std::scientific << std::setprecision(2) << v << std::defaultfloat;
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

CriterionResult make_result(int id, const std::string& name, bool passed, const Detail& d) {
  return {id, name, passed, d.str()};
}

// Maximum over the entries of |a - b|.
Real max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<Real>::infinity();
  return a.size() == 0 ? 0 : (a - b).cwiseAbs().maxCoeff();
}

Matrix scalar(Complex c) { return Matrix::Constant(1, 1, c); }

// Shared suite of Gamma-contractions (used by criteria 4, 5, 8, 9, 11, 12).
std::vector<OperatorPair> suite_pairs(const SuiteOptions& opts, Index count) {
  return generated_contractions(opts.seed, count);
}

// ---------------------------------------------------------------------------

CriterionResult scalar_oracle(const SuiteOptions& opts) {
  Rng rng = criterion_rng(opts, 1);
  Index disagreements = 0;
  Index beta_checked = 0;
  Index beta_disagreements = 0;
  for (Index i = 0; i < 10000; ++i) {
    const Complex z1 = rng.complex_disc(1.5);
    const Complex z2 = rng.complex_disc(1.5);
    const GammaPoint pt = symmetrize(z1, z2);
    const bool bidisc = std::abs(z1) <= 1 && std::abs(z2) <= 1;
    const bool root_based = in_gamma(pt);
    if (root_based != bidisc) ++disagreements;
    if (std::abs(pt.p) <= 1 - 1e-6) {
      ++beta_checked;
      if (in_gamma_by_beta(pt) != root_based) ++beta_disagreements;
    }
  }
  Index boundary_misses = 0;
  for (const auto& pt : boundary_sample(32))
    if (!in_gamma(pt)) ++boundary_misses;
  Detail d;
  d << "root vs bidisc disagreements " << disagreements << "/10000, beta disagreements " << beta_disagreements
    << "/" << beta_checked << ", distinguished boundary misses " << boundary_misses << "/1024";
  return make_result(1, "scalar oracle equivalence", disagreements == 0 && beta_disagreements == 0 && boundary_misses == 0,
                     d);
}

CriterionResult gamma_unitary_theorem(const SuiteOptions& opts) {
  Rng rng = criterion_rng(opts, 2);
  Index classified = 0;
  Index flipped = 0;
  for (Index i = 0; i < 100; ++i) {
    const Index n = 1 + rng.index(4);
    const Matrix v = random_unitary(rng, n);
    const Matrix u1 = v * random_diagonal_unitary(rng, n) * v.adjoint();
    const Matrix u2 = v * random_diagonal_unitary(rng, n) * v.adjoint();
    const OperatorPair pair = gamma_unitary_synth(u1, u2, opts.tol);
    if (classify(pair, opts.tol).kind == GammaKind::GammaUnitary) ++classified;
    const OperatorPair shrunk = make_operator_pair(pair.S, 0.99 * pair.P);
    if (classify(shrunk, opts.tol).kind != GammaKind::GammaUnitary) ++flipped;
  }
  Detail d;
  d << "GammaUnitary " << classified << "/100, flipped after P -> 0.99 P " << flipped << "/100";
  return make_result(2, "Gamma-unitary theorem", classified == 100 && flipped == 100, d);
}

CriterionResult pure_symbol_recovery(const SuiteOptions& opts) {
  Rng rng = criterion_rng(opts, 3);
  Real worst = 0;
  for (Index i = 0; i < 50; ++i) {
    const Index n = 1 + rng.index(4);
    const Real radius = rng.uniform() < 0.25 ? Real(1) : rng.uniform(0.3, 1.0);
    const Matrix a = random_with_numerical_radius(rng, n, radius);
    const Index truncation = 2 + rng.index(6);
    const Matrix recovered = recover_pure_symbol(gamma_isometry_model(a, truncation), truncation);
    worst = std::max(worst, max_abs_diff(recovered, a));
  }
  Detail d;
  d << "max |recovered - A| = ";
  d.sci(worst) << " over 50 symbols (bound 1e-12)";
  return make_result(3, "pure-model symbol recovery", worst <= 1e-12, d);
}

CriterionResult a_equation_criterion(const SuiteOptions& opts) {
  const auto pairs = suite_pairs(opts, 100);
  Index good = 0;
  Real worst_residual = 0;
  Real worst_w = 0;
  for (const auto& pair : pairs) {
    const ClassificationReport r = is_gamma_contraction(pair, opts.tol);
    worst_residual = std::max(worst_residual, r.fundamental_residual);
    worst_w = std::max(worst_w, r.wA);
    if (r.kind == GammaKind::GammaContraction && r.fundamental_residual <= 1e-10 && r.wA <= 1 + 1e-8) ++good;
  }
  Matrix s_neg = Matrix::Zero(2, 2);
  s_neg(0, 0) = 1.2;
  const GammaKind neg1 = classify(make_operator_pair(s_neg, Matrix::Zero(2, 2)), opts.tol).kind;
  const GammaKind neg2 = classify(make_operator_pair(scalar(2.2), scalar(1)), opts.tol).kind;
  const bool passed = good == 100 && neg1 == GammaKind::NotGamma && neg2 == GammaKind::NotGamma;
  Detail d;
  d << "GammaContraction " << good << "/100, max residual ";
  d.sci(worst_residual) << ", max w(F) " << std::setprecision(12) << worst_w << "; negatives " << to_string(neg1)
                        << ", " << to_string(neg2);
  return make_result(4, "A-equation criterion", passed, d);
}

CriterionResult von_neumann(const SuiteOptions& opts) {
  const auto pairs = suite_pairs(opts, 100);
  Rng rng = criterion_rng(opts, 5);
  Real worst = std::numeric_limits<Real>::infinity();
  for (const auto& pair : pairs) {
    const MarginResult m = von_neumann_margin(pair, 3, 100, opts.boundary_grid, rng.raw(), opts.tol);
    worst = std::min(worst, m.min_margin);
  }
  const Real violation =
      margin_for(make_operator_pair(scalar(2.2), scalar(1)), BivariatePoly::monomial(1, 0), opts.boundary_grid);
  Detail d;
  d << "min margin over 100 pairs x 100 polynomials ";
  d.sci(worst) << " (bound -1e-6); scalar (2.2, 1) margin " << std::setprecision(6) << violation << " (bound -0.19)";
  return make_result(5, "von Neumann inequality", worst >= -1e-6 && violation <= -0.19, d);
}

CriterionResult characteristic_function(const SuiteOptions& opts) {
  Real worst_coeff = 0;
  for (const Real c : {0.3, 0.5, 0.9}) {
    const CharFn theta = theta_taylor(scalar(c), 20, opts.tol);
    worst_coeff = std::max(worst_coeff, std::abs(theta.taylor.coeff(0)(0, 0) + c));
    for (Index k = 1; k <= 20; ++k) {
      const Real expected = (1 - c * c) * std::pow(c, static_cast<Real>(k - 1));
      worst_coeff = std::max(worst_coeff, std::abs(theta.taylor.coeff(k)(0, 0) - expected));
    }
  }
  Rng rng = criterion_rng(opts, 6);
  Real worst_norm = 0;
  Real worst_delta = 0;
  for (Index i = 0; i < 20; ++i) {
    const Index n = 1 + rng.index(4);
    const Matrix p = random_with_norm(rng, n, rng.uniform(0.05, 0.95));
    const CharFn theta = theta_taylor(p, 1, opts.tol);
    for (Index j = 0; j < 256; ++j) {
      const Complex z = std::polar(Real(1), 2 * std::numbers::pi * Real(j) / 256);
      worst_norm = std::max(worst_norm, op_norm(theta_eval(theta, z)));
    }
    worst_delta = std::max(worst_delta, max_delta_norm(theta, 256, opts.tol));
  }
  Detail d;
  d << "Mobius coefficient error ";
  d.sci(worst_coeff) << ", max ||Theta(e^it)|| - 1 = ";
  d.sci(worst_norm - 1) << ", max ||Delta_P|| = ";
  d.sci(worst_delta);
  return make_result(6, "characteristic function", worst_coeff <= 1e-12 && worst_norm <= 1 + 1e-9 && worst_delta <= 1e-7,
                     d);
}

CriterionResult nf_model(const SuiteOptions& opts) {
  Rng rng = criterion_rng(opts, 7);
  Index dim_ok = 0;
  Index equiv_ok = 0;
  Real worst_discrepancy = 0;
  Real worst_identity = 0;
  Real worst_tail = 0;
  Real worst_norm = 0;
  for (Index i = 0; i < 20; ++i) {
    const Index n = 1 + rng.index(3);
    const Matrix p = random_with_norm(rng, n, rng.uniform(0.05, 0.9));
    const ModelSpace ms = build_model_space(p, default_truncation(p), opts.tol);
    if (ms.basis.cols() == n) ++dim_ok;
    const Matrix p_model = compress(shift_op(ms.block, ms.n), ms.basis);
    EquivalenceOptions eq;
    eq.tol = std::max(1e-8, 10 * ms.trunc_error);
    const EquivalenceReport rep = joint_unitary_equiv({p_model}, {p}, eq);
    if (rep.equivalent) ++equiv_ok;
    worst_discrepancy = std::max(worst_discrepancy, rep.discrepancy);

    const Index n32 = 32;
    const Matrix pi = pi_nf_matrix(p, n32, opts.tol);
    const Matrix shift = shift_op(pi.rows() / (n32 + 1), n32).matrix;
    const Real identity = op_norm((pi.adjoint() * shift * pi - p).eval());
    if (identity > worst_identity) {
      worst_identity = identity;
      // Exact value of the truncation defect: Pi* M_z Pi - P = -P^{N+1} P^{*N}.
      Matrix pn = Matrix::Identity(n, n);
      for (Index k = 0; k < n32; ++k) pn = (pn * p).eval();
      worst_tail = op_norm((p * pn * pn.adjoint()).eval());
      worst_norm = op_norm(p);
    }
  }
  Detail d;
  d << "dim Q_P = dim P " << dim_ok << "/20, compress(M_z) ~ P " << equiv_ok << "/20 (max discrepancy ";
  d.sci(worst_discrepancy) << "), max ||Pi* M_z Pi - P|| at N = 32 ";
  d.sci(worst_identity) << " (bound 1e-5; there ||P|| = " << std::setprecision(4) << worst_norm
                        << " and ||P^33 P*^32|| = ";
  d.sci(worst_tail) << ")";
  return make_result(7, "NF model", dim_ok == 20 && equiv_ok == 20 && worst_identity <= 1e-5, d);
}

CriterionResult nf_ay_model(const SuiteOptions& opts) {
  const auto pairs = suite_pairs(opts, 20);
  Index good = 0;
  Real worst_ratio = 0;
  for (const auto& pair : pairs) {
    const NfAyModel model = nf_ay_build(pair, 0, opts.tol);
    const Real allowed = std::max(1e-8, 10 * model.model_space.trunc_error);
    const Real residual = std::max(model.residual_S, model.residual_P);
    worst_ratio = std::max(worst_ratio, residual / allowed);
    if (residual <= allowed) ++good;
  }
  const NfAyModel scalar_model = nf_ay_build(make_operator_pair(scalar(1.2), scalar(0.5)), 0, opts.tol);
  const CompressedScalar cs = compressed_scalar(scalar_model);
  const Real s_err = std::abs(scalar_model.S_model(0, 0) - 1.2);
  const Real x_err = std::abs(cs.X(0, 0) - 0.8);
  Detail d;
  d << "round trip within max(1e-8, 10 trunc) " << good << "/20 (worst residual/allowed ";
  d.sci(worst_ratio) << "); scalar (1.2, 0.5): |s - 1.2| = ";
  d.sci(s_err) << ", |X - 0.8| = ";
  d.sci(x_err);
  return make_result(8, "NF-AY model and compressed scalar", good == 20 && s_err <= 1e-6 && x_err <= 1e-6, d);
}

CriterionResult schaffer_dilation(const SuiteOptions& opts) {
  const auto pairs = suite_pairs(opts, 100);
  Real worst = 0;
  Index isometries = 0;
  for (const auto& pair : pairs) {
    const SchafferPair sb = schaffer_build(pair, 8, opts.tol);
    worst = std::max(worst, op_norm((sb.V.adjoint() * sb.embed - sb.embed * pair.P.adjoint()).eval()));
    worst = std::max(worst, op_norm((sb.W.adjoint() * sb.embed - sb.embed * pair.S.adjoint()).eval()));
    if (is_gamma_isometry(sb.as_pair(), opts.tol).holds) ++isometries;
  }
  Detail d;
  d << "max intertwining residual ";
  d.sci(worst) << " (bound 1e-12), Gamma-isometry on window " << isometries << "/100";
  return make_result(9, "Schaffer dilation", worst <= 1e-12 && isometries == 100, d);
}

// Inner polynomial built from shifts and elementary Blaschke-Potapov factors.
SymbolPoly random_inner(Rng& rng, Index m) {
  SymbolPoly theta = SymbolPoly::constant(random_unitary(rng, m));
  const Index factors = 1 + rng.index(2);
  for (Index f = 0; f < factors; ++f) {
    if (rng.uniform() < 0.3)
      theta = theta * SymbolPoly::monomial(m, 1);
    else
      theta = theta * blaschke_potapov_factor(rng, m, 1 + rng.index(m));
  }
  return theta;
}

CriterionResult blh_theorem(const SuiteOptions& opts) {
  Rng rng = criterion_rng(opts, 10);
  Index agree = 0;
  Index solved_count = 0;
  Index transport_checked = 0;
  Real worst_wb = 0;
  for (Index i = 0; i < 200; ++i) {
    const Index m = 1 + rng.index(3);
    const SymbolPoly theta = random_inner(rng, m);
    Matrix a;
    if (i % 2 == 0) {
      const Real radius = rng.uniform() < 0.25 ? Real(1) : rng.uniform(0.3, 1.0);
      a = blh_solve_for_a(random_with_numerical_radius(rng, m, radius), theta, opts.tol).first;
    } else {
      a = random_with_numerical_radius(rng, m, rng.uniform(0.3, 1.0));
    }
    const BlhProblem prob(a, theta);
    const BlhResult r = blh_solve(prob, opts.tol);
    const bool solved = std::holds_alternative<BlhSolution>(r);
    const bool invariant = invariance_check(a, theta, theta.degree() + 3, opts.tol).invariant;
    if (solved == invariant) ++agree;
    if (solved) {
      ++solved_count;
      if (numerical_radius(a).value <= 1 + opts.tol.wr_slack && prob.inner_residual <= 1e-8) {
        ++transport_checked;
        worst_wb = std::max(worst_wb, std::get<BlhSolution>(r).wB);
      }
    }
  }

  const Matrix a = random_with_numerical_radius(rng, 3, 0.8);
  const BlhResult shift = blh_solve(BlhProblem(a, SymbolPoly::monomial(3, 1)), opts.tol);
  const Real shift_err =
      std::holds_alternative<BlhSolution>(shift) ? max_abs_diff(std::get<BlhSolution>(shift).B, a) : 1e300;
  const Matrix w = random_unitary(rng, 3);
  const BlhResult rotated = blh_solve(BlhProblem(a, SymbolPoly::constant(w)), opts.tol);
  const Real rotated_err = std::holds_alternative<BlhSolution>(rotated)
                               ? max_abs_diff(std::get<BlhSolution>(rotated).B, w.adjoint() * a * w)
                               : 1e300;
  Matrix counter_a = Matrix::Zero(2, 2);
  counter_a(0, 1) = 2;
  Matrix c0 = Matrix::Zero(2, 2);
  Matrix c1 = Matrix::Zero(2, 2);
  c0(1, 1) = 1;
  c1(0, 0) = 1;
  const BlhResult counter = blh_solve(BlhProblem(counter_a, SymbolPoly({c0, c1})), opts.tol);
  const bool counter_ok = std::holds_alternative<NoSolution>(counter) && std::get<NoSolution>(counter).residual >= 1;

  const bool passed = agree == 200 && shift_err <= 1e-12 && rotated_err <= 1e-12 && counter_ok &&
                      worst_wb <= 1 + 1e-6;
  Detail d;
  d << "solve/invariance agree " << agree << "/200 (" << solved_count << " solvable), max w(B) "
    << std::setprecision(10) << worst_wb << " over " << transport_checked << "; Theta = zI error ";
  d.sci(shift_err) << ", constant unitary error ";
  d.sci(rotated_err) << ", diag(z, 1) " << (counter_ok ? "NoSolution" : "unexpected");
  return make_result(10, "BLH theorem", passed, d);
}

CriterionResult complete_invariant(const SuiteOptions& opts) {
  const auto pairs = suite_pairs(opts, 50);
  Rng rng = criterion_rng(opts, 11);
  struct Prepared {
    OperatorPair pair;
    Matrix X;
    Matrix P_model;
  };
  auto prepare = [&](const OperatorPair& pair) {
    const NfAyModel model = nf_ay_build(pair, 0, opts.tol);
    return Prepared{pair, compressed_scalar(model).X, model.P_model};
  };
  auto same = [](const Prepared& a, const Prepared& b) {
    const bool sp = joint_unitary_equiv({a.pair.S, a.pair.P}, {b.pair.S, b.pair.P}).equivalent;
    const bool xp = joint_unitary_equiv({a.X, a.P_model}, {b.X, b.P_model}).equivalent;
    return std::pair{sp, xp};
  };

  // Each pair is compared with its own conjugate, a conjugate of its
  // neighbour and a conjugate of its adjoint pair (same dimension).
  std::vector<Prepared> originals;
  std::vector<Prepared> conjugates;
  std::vector<Prepared> adjoints;
  for (const auto& pair : pairs) {
    originals.push_back(prepare(pair));
    conjugates.push_back(prepare(conjugate_pair(pair, random_unitary(rng, pair.dim()))));
    adjoints.push_back(prepare(conjugate_pair(adjoint_pair(pair), random_unitary(rng, pair.dim()))));
  }
  Index matches = 0;
  Index cases = 0;
  Index equivalent_cases = 0;
  auto compare = [&](const Prepared& a, const Prepared& b) {
    const auto [sp, xp] = same(a, b);
    ++cases;
    if (sp == xp) ++matches;
    if (sp) ++equivalent_cases;
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    compare(originals[i], conjugates[i]);
    compare(originals[i], conjugates[(i + 1) % pairs.size()]);
    compare(originals[i], adjoints[i]);
  }
  Detail d;
  d << "(X, P) verdict matches (S, P) in " << matches << "/" << cases << " comparisons (" << equivalent_cases
    << " equivalent)";
  return make_result(11, "complete invariant", matches == cases, d);
}

CriterionResult factorization(const SuiteOptions& opts) {
  const auto pairs = suite_pairs(opts, 20);
  Real worst_iso = 0;
  Real worst_block = 0;
  for (const auto& pair : pairs) {
    const Index n = 8;
    const SchafferPair sb = schaffer_build(pair, n, opts.tol);
    FactorizationOptions fo;
    fo.depth = n;
    const FactorizationResult r = factorization_check(pair.P, sb.V, sb.embed, fo, opts.tol);
    worst_iso = std::max(worst_iso, r.isometry_residual);
    worst_block = std::max(worst_block, r.block_residual);
  }
  Detail d;
  d << "max isometry residual ";
  d.sci(worst_iso) << ", max block residual ";
  d.sci(worst_block) << " (bounds 1e-8)";
  return make_result(12, "Schaffer-vs-NF factorization", worst_iso <= 1e-8 && worst_block <= 1e-8, d);
}

}  // namespace

std::vector<OperatorPair> generated_contractions(std::uint64_t seed, Index count) {
  Rng rng(seed ^ kGolden);
  std::vector<OperatorPair> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i) out.push_back(random_gamma_contraction(rng));
  return out;
}

const std::vector<Criterion>& suite_criteria() {
  static const std::vector<Criterion> all = {
      {1, "scalar oracle equivalence", scalar_oracle},
      {2, "Gamma-unitary theorem", gamma_unitary_theorem},
      {3, "pure-model symbol recovery", pure_symbol_recovery},
      {4, "A-equation criterion", a_equation_criterion},
      {5, "von Neumann inequality", von_neumann},
      {6, "characteristic function", characteristic_function},
      {7, "NF model", nf_model},
      {8, "NF-AY model and compressed scalar", nf_ay_model},
      {9, "Schaffer dilation", schaffer_dilation},
      {10, "BLH theorem", blh_theorem},
      {11, "complete invariant", complete_invariant},
      {12, "Schaffer-vs-NF factorization", factorization},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, const SuiteOptions& opts) {
  try {
    return c.run(opts);
  } catch (const Error& e) {
    return {c.id, c.name, false, std::string("error ") + std::string(to_string(e.kind())) + ": " + e.what()};
  } catch (const std::exception& e) {
    return {c.id, c.name, false, std::string("exception: ") + e.what()};
  }
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (const auto& c : suite_criteria()) out.push_back(run_criterion(c, opts));
  return out;
}

}  // namespace gammaop
