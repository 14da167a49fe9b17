#include "doctest.h"
#include "gammaop/classify.hpp"
#include "gammaop/dilation.hpp"
#include "gammaop/gamma_point.hpp"
#include "gammaop/generators.hpp"
#include "gammaop/hardy.hpp"
#include "gammaop/linalg.hpp"
#include "gammaop/random.hpp"
#include "gammaop/suite.hpp"
#include "test_support.hpp"

using namespace gammaop;
using gammaop::test::diag;
using gammaop::test::error_kind;
using gammaop::test::I;
using gammaop::test::mat;
using gammaop::test::max_diff;
using gammaop::test::scalar;

TEST_CASE("Gamma-unitary examples") {
  const Matrix u1 = diag({1, I});
  const Matrix u2 = diag({-1, 1});
  CHECK(is_gamma_unitary(make_operator_pair(u1 + u2, u1 * u2)).holds);
  CHECK(is_gamma_unitary(make_operator_pair(Matrix::Zero(2, 2), Matrix::Identity(2, 2))).holds);
  CHECK_FALSE(is_gamma_unitary(make_operator_pair(Matrix::Zero(2, 2), 0.5 * Matrix::Identity(2, 2))).holds);
  CHECK(classify(make_operator_pair(u1 + u2, u1 * u2)).kind == GammaKind::GammaUnitary);
}

TEST_CASE("Gamma-isometry examples") {
  const Matrix u = diag({1, I});
  CHECK(is_gamma_isometry(make_operator_pair(2 * u, u * u)).holds);
  Rng rng(51);
  const Matrix a = random_with_numerical_radius(rng, 2, 0.9);
  const OperatorPair model = gamma_isometry_model(a, 5);
  CHECK(is_gamma_isometry(model).holds);
  CHECK(classify(model).kind == GammaKind::GammaIsometry);
  // Without the window the truncated shift is not isometric.
  CHECK_FALSE(is_gamma_isometry(make_operator_pair(model.S, model.P)).holds);
  CHECK_FALSE(is_gamma_isometry(make_operator_pair(scalar(0), scalar(0.5))).holds);
}

TEST_CASE("fundamental operator examples") {
  const Matrix s = mat({{0, 2}, {0, 0}});
  const FundamentalOp f = fundamental_op(make_operator_pair(s, Matrix::Zero(2, 2)));
  CHECK(max_diff(f.F, s) <= 1e-15);
  CHECK(f.residual <= 1e-15);

  const Matrix u = diag({1, I});
  const FundamentalOp g = fundamental_op(make_operator_pair(u + 1.0 * Matrix::Identity(2, 2), u));
  CHECK(g.F.size() == 0);
  CHECK(g.residual <= 1e-15);

  CHECK(error_kind([] { fundamental_op(make_operator_pair(scalar(0), scalar(2))); }) == ErrorKind::NotAContraction);
}

TEST_CASE("Gamma-contraction examples") {
  const ClassificationReport nil = is_gamma_contraction(make_operator_pair(mat({{0, 2}, {0, 0}}), Matrix::Zero(2, 2)));
  CHECK(nil.kind == GammaKind::GammaContraction);
  CHECK(nil.wA == doctest::Approx(1).epsilon(1e-12));
  REQUIRE(nil.fundamental_op);

  CHECK(is_gamma_contraction(make_operator_pair(diag({1.2, 0}), Matrix::Zero(2, 2))).kind == GammaKind::NotGamma);
  CHECK(classify(make_operator_pair(scalar(2.2), scalar(1))).kind == GammaKind::NotGamma);
  CHECK(is_gamma_contraction(make_operator_pair(diag({1, I}) + diag({-1, 1}), diag({-1, I}))).kind ==
        GammaKind::GammaContraction);
  CHECK(is_gamma_contraction(make_operator_pair(scalar(0), scalar(1.5))).kind == GammaKind::NotGamma);
}

TEST_CASE("non-commuting pairs are rejected") {
  const OperatorPair pair = make_operator_pair(mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}}));
  CHECK(error_kind([&] { classify(pair); }) == ErrorKind::NotCommuting);
  CHECK(error_kind([&] { is_gamma_unitary(pair); }) == ErrorKind::NotCommuting);
  CHECK(error_kind([&] { is_gamma_isometry(pair); }) == ErrorKind::NotCommuting);
  CHECK(error_kind([&] { von_neumann_margin(pair, 1, 1, 8, 1); }) == ErrorKind::NotCommuting);
}

TEST_CASE("scalar criterion agrees with membership") {
  Rng rng(52);
  for (int i = 0; i < 1000; ++i) {
    const Complex s = rng.complex_box() * 2.2;
    const Complex p = rng.complex_disc(1.0);
    const bool member = in_gamma({s, p});
    const GammaKind kind = is_gamma_contraction(make_operator_pair(scalar(s), scalar(p))).kind;
    REQUIRE(kind != GammaKind::Inconclusive);
    CHECK((kind == GammaKind::GammaContraction) == member);
  }
}

TEST_CASE("hierarchy and adjoint symmetry on generated pairs") {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const Index n = 1 + rng.index(3);
    const Matrix v = random_unitary(rng, n);
    const Matrix u1 = v * random_diagonal_unitary(rng, n) * v.adjoint();
    const Matrix u2 = v * random_diagonal_unitary(rng, n) * v.adjoint();
    const OperatorPair unitary = gamma_unitary_synth(u1, u2);
    CHECK(is_gamma_unitary(unitary).holds);
    CHECK(is_gamma_isometry(unitary).holds);
    CHECK(is_gamma_contraction(unitary).kind == GammaKind::GammaContraction);

    const OperatorPair model = gamma_isometry_model(random_with_numerical_radius(rng, n, rng.uniform(0.3, 1.0)), 4);
    CHECK(is_gamma_isometry(model).holds);
  }
  for (const auto& pair : generated_contractions(99, 30)) {
    const ClassificationReport r = is_gamma_contraction(pair);
    CHECK(r.kind == GammaKind::GammaContraction);
    CHECK(r.fundamental_residual <= 1e-10);
    CHECK(r.wA <= 1 + 1e-8);
    CHECK(is_gamma_contraction(adjoint_pair(pair)).kind == GammaKind::GammaContraction);
  }
}

TEST_CASE("pure symbol recovery") {
  CHECK(recover_pure_symbol(gamma_isometry_model(Matrix::Zero(2, 2), 3), 3).cwiseAbs().maxCoeff() == 0);
  const Matrix nil = mat({{0, 2}, {0, 0}});
  CHECK(max_diff(recover_pure_symbol(gamma_isometry_model(nil, 4), 4), nil) <= 1e-12);
  Rng rng(54);
  for (int i = 0; i < 10; ++i) {
    const Matrix a = random_with_numerical_radius(rng, 1 + rng.index(4), rng.uniform(0.2, 1.0));
    CHECK(max_diff(recover_pure_symbol(gamma_isometry_model(a, 6), 6), a) <= 1e-12);
  }
  OperatorPair broken = gamma_isometry_model(nil, 3);
  broken.S(4, 1) += 0.1;
  CHECK(error_kind([&] { recover_pure_symbol(broken, 3); }) == ErrorKind::NotPureModelForm);
  CHECK(error_kind([] { recover_pure_symbol(make_operator_pair(Matrix::Zero(3, 3), Matrix::Zero(3, 3)), 3); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("bivariate polynomials") {
  const BivariatePoly q = BivariatePoly::monomial(1, 2, 3.0);
  CHECK(q.degree == 3);
  CHECK(std::abs(q.evaluate(Complex(2), Complex(I)) - Complex(-6)) <= 1e-14);
  const Matrix s = diag({2, 1});
  const Matrix p = diag({I, 0.5});
  CHECK(max_diff(q.evaluate(s, p), diag({-6, 0.75})) <= 1e-14);
  CHECK(boundary_sup(BivariatePoly::monomial(1, 0), 16) == doctest::Approx(2).epsilon(1e-12));
  CHECK(boundary_sup(BivariatePoly::constant(0.5), 4) == doctest::Approx(0.5));
}

TEST_CASE("von Neumann margins") {
  Rng rng(55);
  const Matrix s = mat({{0.3, 0.1}, {0, -0.2}});
  const OperatorPair any = make_operator_pair(s, Matrix::Zero(2, 2));
  CHECK(margin_for(any, BivariatePoly::constant(1), 64) == 0);
  CHECK(margin_for(make_operator_pair(scalar(2.2), scalar(1)), BivariatePoly::monomial(1, 0), 64) ==
        doctest::Approx(-0.2).epsilon(1e-12));
  const OperatorPair unitary = gamma_unitary_synth(diag({1, I}), diag({-1, 1}));
  CHECK(von_neumann_margin(unitary, 3, 100, 64, 7).min_margin >= -1e-9);
  for (const auto& pair : generated_contractions(5, 5)) CHECK(von_neumann_margin(pair, 3, 100, 64, 8).min_margin >= -1e-6);
}
