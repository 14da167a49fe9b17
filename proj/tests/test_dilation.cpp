#include "doctest.h"
#include "gammaop/classify.hpp"
#include "gammaop/dilation.hpp"
#include "gammaop/equivalence.hpp"
#include "gammaop/gamma_point.hpp"
#include "gammaop/generators.hpp"
#include "gammaop/hardy.hpp"
#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"
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

TEST_CASE("Schaffer dilation with P = 0") {
  const Matrix s = mat({{0, 2}, {0, 0}});
  const SchafferPair sb = schaffer_build(make_operator_pair(s, Matrix::Zero(2, 2)), 3);
  CHECK(sb.head_dim == 2);
  CHECK(sb.defect_dim == 2);
  CHECK(sb.V.rows() == 2 + 2 * 4);
  CHECK(max_diff(sb.A_used, s) <= 1e-15);
  // Lower-left blocks: D_P = I maps h to the constant h; A^* D_P = S^*.
  CHECK(max_diff(sb.V.block(2, 0, 2, 2), Matrix::Identity(2, 2)) <= 1e-15);
  CHECK(max_diff(sb.W.block(2, 0, 2, 2), s.adjoint()) <= 1e-15);
  CHECK(max_diff(sb.W.bottomRightCorner(8, 8), build_mult_op(SymbolPoly::pencil(s), 3).matrix) <= 1e-15);
  CHECK(max_diff(sb.V.bottomRightCorner(8, 8), shift_op(2, 3).matrix) == 0);
}

TEST_CASE("Schaffer dilation of a Gamma-unitary is the pair itself") {
  const OperatorPair unitary = gamma_unitary_synth(diag({1, I}), diag({-1, 1}));
  const SchafferPair sb = schaffer_build(unitary, 4);
  CHECK(sb.defect_dim == 0);
  CHECK(max_diff(sb.V, unitary.P) == 0);
  CHECK(max_diff(sb.W, unitary.S) == 0);
}

TEST_CASE("Schaffer dilation properties") {
  for (const auto& pair : generated_contractions(71, 25)) {
    const SchafferPair sb = schaffer_build(pair, 6);
    CHECK(op_norm((sb.V.adjoint() * sb.embed - sb.embed * pair.P.adjoint()).eval()) <= 1e-12);
    CHECK(op_norm((sb.W.adjoint() * sb.embed - sb.embed * pair.S.adjoint()).eval()) <= 1e-12);
    CHECK(is_gamma_isometry(sb.as_pair()).holds);
  }
  CHECK(error_kind([] { schaffer_build(make_operator_pair(diag({1.2, 0}), Matrix::Zero(2, 2)), 4); }) ==
        ErrorKind::ClassificationFailed);
  CHECK(error_kind([] { schaffer_build(make_operator_pair(scalar(0), scalar(0)), 1); }) ==
        ErrorKind::TruncationTooSmall);
}

TEST_CASE("NF-AY model with P = 0 is exact") {
  const Matrix s = mat({{0.3, 0.5}, {0, -0.4}});
  const NfAyModel model = nf_ay_build(make_operator_pair(s, Matrix::Zero(2, 2)), 4);
  CHECK(max_diff(model.symbol_A, s) <= 1e-15);
  CHECK(model.model_space.basis.cols() == 2);
  CHECK(max_diff(model.S_model, s) <= 1e-15);
  CHECK(model.P_model.cwiseAbs().maxCoeff() <= 1e-15);
  const CompressedScalar cs = compressed_scalar(model);
  CHECK(max_diff(cs.X, s) <= 1e-15);
}

TEST_CASE("NF-AY scalar model") {
  const OperatorPair pair = make_operator_pair(scalar(1.2), scalar(0.5));
  const NfAyModel model = nf_ay_build(pair, 30);
  CHECK(std::abs(model.S_model(0, 0) - 1.2) <= 1e-6);
  CHECK(std::abs(model.P_model(0, 0) - 0.5) <= 1e-6);
  const CompressedScalar cs = compressed_scalar(model);
  CHECK(std::abs(cs.X(0, 0) - 0.8) <= 1e-6);
  CHECK(std::abs(rederive_compressed_scalar(pair.S, pair.P)(0, 0) - 0.8) <= 1e-12);
}

TEST_CASE("NF-AY round trip and uniqueness of the symbol") {
  Rng rng(72);
  for (const auto& pair : generated_contractions(73, 10)) {
    const NfAyModel model = nf_ay_build(pair);
    const Real allowed = std::max(1e-8, 10 * model.model_space.trunc_error);
    CHECK(model.residual_S <= allowed);
    CHECK(model.residual_P <= allowed);
    CHECK(numerical_radius_at_most_one(model.symbol_A));

    const CompressedScalar cs = compressed_scalar(model);
    CHECK(cs.residual <= 1e-7);
    const Matrix rederived = rederive_compressed_scalar(model.S_model, model.P_model);
    CHECK(max_diff(rederived, cs.X) <= 1e-8);

    const Index b = model.symbol_A.rows();
    const Matrix w = random_unitary(rng, b);
    const NfAyModel rotated = nf_ay_build(pair, model.model_space.n, {}, w);
    CHECK(max_diff(rotated.symbol_A, w.adjoint() * model.symbol_A * w) <= 1e-10);
    CHECK(joint_unitary_equiv({rotated.S_model, rotated.P_model}, {model.S_model, model.P_model}).equivalent);
    CHECK(model.model_space.delta_norm <= 1e-7);
  }
}

TEST_CASE("NF-AY error paths") {
  CHECK(error_kind([] { nf_ay_build(make_operator_pair(diag({1.2, 0}), Matrix::Zero(2, 2))); }) ==
        ErrorKind::ClassificationFailed);
  CHECK(error_kind([] { nf_ay_build(make_operator_pair(scalar(2), scalar(1))); }) == ErrorKind::NotCnu);
  CHECK(error_kind([] { nf_ay_build(make_operator_pair(scalar(0.1), scalar(0.9)), 1); }) ==
        ErrorKind::TruncationTooSmall);
  CHECK(error_kind([] { nf_ay_build(make_operator_pair(scalar(1.2), scalar(0.5)), 30, {}, Matrix::Identity(2, 2)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("compressed scalar reports a broken model") {
  NfAyModel model = nf_ay_build(make_operator_pair(scalar(1.2), scalar(0.5)), 30);
  model.S_model(0, 0) += 0.01;
  CHECK(error_kind([&] { compressed_scalar(model); }) == ErrorKind::ResidualTooLarge);
}

TEST_CASE("Gamma-unitary synthesis") {
  const OperatorPair one = gamma_unitary_synth(scalar(1), scalar(1));
  CHECK(std::abs(one.S(0, 0) - 2.0) <= 1e-15);
  CHECK(std::abs(one.P(0, 0) - 1.0) <= 1e-15);

  const OperatorPair d = gamma_unitary_synth(diag({1, I}), diag({-1, 1}));
  CHECK(max_diff(d.S, diag({0, 1.0 + I})) <= 1e-15);
  CHECK(max_diff(d.P, diag({-1, I})) <= 1e-15);
  for (Index k = 0; k < 2; ++k) {
    CHECK(in_gamma({d.S(k, k), d.P(k, k)}));
    CHECK(std::abs(std::abs(d.P(k, k)) - 1) <= 1e-15);
  }

  CHECK(error_kind([] { gamma_unitary_synth(scalar(0.5), scalar(1)); }) == ErrorKind::NotUnitary);
  CHECK(error_kind([] {
          const Matrix x = mat({{0, 1}, {1, 0}});
          gamma_unitary_synth(x, diag({1, -1}));
        }) == ErrorKind::NotCommuting);
  CHECK(error_kind([] { gamma_unitary_synth(scalar(1), Matrix::Identity(2, 2)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("direct sum with a Gamma-unitary stays a Gamma-contraction") {
  for (const auto& pair : generated_contractions(74, 5)) {
    const OperatorPair sum = direct_sum(pair, gamma_unitary_synth(diag({1, I}), diag({-1, 1})));
    const ClassificationReport r = is_gamma_contraction(sum);
    CHECK(r.kind == GammaKind::GammaContraction);
    CHECK(r.wA <= 1 + 1e-8);
  }
}

TEST_CASE("factorization against the NF dilation itself") {
  Rng rng(75);
  const Matrix p = random_with_norm(rng, 2, 0.6);
  const Index n = default_truncation(p);
  const NfDilation nf = nf_dilation(p, n, 4);
  FactorizationOptions fo;
  fo.depth = 4;
  fo.nf_truncation = n;
  const FactorizationResult r = factorization_check(p, nf.V, nf.embed, fo);
  CHECK(r.isometry_residual <= 1e-8);
  CHECK(r.block_residual <= 1e-8);
  const Matrix span = range_basis((nf.embed).eval());
  CHECK(op_norm((r.Phi * span - span).eval()) <= 1e-8);
}

TEST_CASE("factorization against Schaffer and padded dilations") {
  for (const auto& pair : generated_contractions(76, 8)) {
    const SchafferPair sb = schaffer_build(pair, 8);
    FactorizationOptions fo;
    fo.depth = 8;
    const FactorizationResult r = factorization_check(pair.P, sb.V, sb.embed, fo);
    CHECK(r.isometry_residual <= 1e-8);
    CHECK(r.block_residual <= 1e-8);
    CHECK(r.domain_rank == r.range_rank);
  }

  // NF dilation with an extra shift summand that embed never reaches.
  Rng rng(77);
  const Matrix p = random_with_norm(rng, 2, 0.5);
  const Index n = default_truncation(p);
  const NfDilation nf = nf_dilation(p, n, 3);
  const Index big = nf.V.rows();
  Matrix v = Matrix::Zero(big + 4, big + 4);
  v.topLeftCorner(big, big) = nf.V;
  v.bottomRightCorner(4, 4) = shift_op(1, 3).matrix;
  Matrix embed = Matrix::Zero(big + 4, 2);
  embed.topRows(big) = nf.embed;
  FactorizationOptions fo;
  fo.depth = 3;
  fo.nf_truncation = n;
  const FactorizationResult r = factorization_check(p, v, embed, fo);
  CHECK(r.isometry_residual <= 1e-8);
  CHECK(r.block_residual <= 1e-8);
  CHECK(r.Phi.rows() > r.domain_rank);

  Matrix bad = embed;
  bad(0, 0) += 0.1;
  CHECK(error_kind([&] { factorization_check(p, v, bad, fo); }) == ErrorKind::NotADilation);
  CHECK(error_kind([&] { factorization_check(p, v, embed.leftCols(1), fo); }) == ErrorKind::DimensionMismatch);
}
