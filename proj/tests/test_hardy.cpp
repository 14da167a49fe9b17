#include "doctest.h"
#include "gammaop/classify.hpp"
#include "gammaop/generators.hpp"
#include "gammaop/hardy.hpp"
#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"
#include "gammaop/random.hpp"
#include "test_support.hpp"

using namespace gammaop;
using gammaop::test::error_kind;
using gammaop::test::mat;
using gammaop::test::max_diff;
using gammaop::test::scalar;

TEST_CASE("build_mult_op examples") {
  const TruncatedOp shift = build_mult_op(SymbolPoly::monomial(1, 1), 2);
  CHECK(max_diff(shift.matrix, mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})) == 0);
  CHECK(shift.interior_hi == 1);
  CHECK(shift.interior_cols() == 2);

  const Matrix c = mat({{1, 2}, {3, test::I}});
  const TruncatedOp constant = build_mult_op(SymbolPoly::constant(c), 2);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(max_diff(block_at(constant.matrix, i, j, 2, 2), i == j ? c : Matrix::Zero(2, 2)) == 0);

  const Matrix a = mat({{0.2, test::I}, {0.5, -1}});
  const TruncatedOp pencil = build_mult_op(SymbolPoly::pencil(a), 1);
  Matrix expected = Matrix::Zero(4, 4);
  expected.topLeftCorner(2, 2) = a;
  expected.bottomRightCorner(2, 2) = a;
  expected.bottomLeftCorner(2, 2) = a.adjoint();
  CHECK(max_diff(pencil.matrix, expected) == 0);
}

TEST_CASE("build_mult_op needs N >= deg") {
  CHECK(error_kind([] { build_mult_op(SymbolPoly::monomial(1, 2), 1); }) == ErrorKind::TruncationTooSmall);
  CHECK_NOTHROW(build_mult_op(SymbolPoly::monomial(1, 2), 2));
}

TEST_CASE("SymbolPoly basics") {
  CHECK(error_kind([] { SymbolPoly(std::vector<Matrix>{}); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([] { SymbolPoly({Matrix::Zero(2, 2), Matrix::Zero(2, 3)}); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind([] { SymbolPoly::pencil(Matrix::Zero(2, 3)); }) == ErrorKind::DimensionMismatch);
  const SymbolPoly m = SymbolPoly::monomial(2, 3);
  CHECK(m.degree() == 3);
  CHECK(max_diff(m.coeff_or_zero(5), Matrix::Zero(2, 2)) == 0);
  CHECK(max_diff(m.evaluate(Complex(0, 2)), Complex(0, -8) * Matrix::Identity(2, 2)) <= 1e-14);
}

TEST_CASE("product of symbols evaluates pointwise") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const SymbolPoly phi({random_gaussian(rng, 2, 3), random_gaussian(rng, 2, 3)});
    const SymbolPoly psi({random_gaussian(rng, 3, 2), random_gaussian(rng, 3, 2), random_gaussian(rng, 3, 2)});
    const SymbolPoly prod = phi * psi;
    CHECK(prod.degree() == 3);
    const Complex z = rng.complex_disc(1.2);
    CHECK(max_diff(prod.evaluate(z), phi.evaluate(z) * psi.evaluate(z)) <= 1e-12);
  }
  CHECK(error_kind([] { SymbolPoly::monomial(2, 1) * SymbolPoly::monomial(3, 1); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("truncated multiplication is multiplicative on the interior") {
  Rng rng(32);
  for (int i = 0; i < 20; ++i) {
    const Index n = 6;
    const SymbolPoly phi({random_gaussian(rng, 2, 2), random_gaussian(rng, 2, 2)});
    const SymbolPoly psi({random_gaussian(rng, 2, 2), random_gaussian(rng, 2, 2), random_gaussian(rng, 2, 2)});
    const Matrix lhs = build_mult_op(phi * psi, n).matrix;
    const Matrix rhs = build_mult_op(phi, n).matrix * build_mult_op(psi, n).matrix;
    const Index interior = n - phi.degree() - psi.degree();
    for (Index r = 0; r <= n; ++r)
      for (Index c = 0; c <= n; ++c)
        if (r + c <= interior) CHECK(max_diff(block_at(lhs, r, c, 2, 2), block_at(rhs, r, c, 2, 2)) <= 1e-12);
    // Lower block-triangular products are exact everywhere.
    CHECK(max_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("gamma_isometry_model examples") {
  const OperatorPair zero = gamma_isometry_model(Matrix::Zero(1, 1), 3);
  CHECK(zero.S.cwiseAbs().maxCoeff() == 0);
  CHECK(max_diff(zero.P, shift_op(1, 3).matrix) == 0);

  const OperatorPair one = gamma_isometry_model(scalar(1), 3);
  CHECK(max_diff(one.S, mat({{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}})) == 0);

  const OperatorPair nil = gamma_isometry_model(mat({{0, 2}, {0, 0}}), 3);
  REQUIRE(nil.window);
  CHECK(*nil.window == 6);
  CHECK(op_norm(window_cols(nil.S - nil.S.adjoint() * nil.P, nil.window)) == 0);
  CHECK(error_kind([] { gamma_isometry_model(scalar(1), 0); }) == ErrorKind::TruncationTooSmall);
}

TEST_CASE("gamma_isometry_model identities on the window") {
  Rng rng(33);
  for (int i = 0; i < 30; ++i) {
    const Index b = 1 + rng.index(3);
    const Index n = 2 + rng.index(5);
    const Matrix a = random_with_numerical_radius(rng, b, rng.uniform(0.2, 1.0));
    const OperatorPair pair = gamma_isometry_model(a, n);
    const Matrix id = Matrix::Identity(pair.dim(), pair.dim());
    CHECK(op_norm(window_cols(pair.P.adjoint() * pair.P - id, pair.window)) <= 1e-14);
    CHECK(op_norm(window_cols(pair.S * pair.P - pair.P * pair.S, pair.window)) <= 1e-14);
    CHECK(pair.commutator_norm <= 1e-14);
    CHECK(op_norm(window_cols(pair.S - pair.S.adjoint() * pair.P, pair.window)) <= 1e-14);
    CHECK(op_norm(pair.S) <= 2 + 1e-12);
    // S^* - S P^* = P_C (x) A^* on the blocks with both degrees <= N - 1.
    const Matrix diff = pair.S.adjoint() - pair.S * pair.P.adjoint();
    const Matrix expected = pc_tensor(a.adjoint(), n);
    CHECK(max_diff(diff.topLeftCorner(b * n, b * n), expected.topLeftCorner(b * n, b * n)) <= 1e-14);
    // At the top degree the truncated shift is not an isometry.
    CHECK(op_norm((pair.P.adjoint() * pair.P - id).eval()) == doctest::Approx(1));
  }
}

TEST_CASE("compress examples") {
  const Matrix shift = shift_op(1, 2).matrix;
  CHECK(max_diff(compress(shift, Matrix::Identity(3, 3)), shift) == 0);
  CHECK(max_diff(compress(shift, Matrix::Identity(3, 1)), Matrix::Zero(1, 1)) == 0);
  CHECK(max_diff(compress(shift_op(1, 2), Matrix::Identity(3, 2)), mat({{0, 0}, {1, 0}})) == 0);
  CHECK(error_kind([&] { compress(shift, Matrix::Identity(2, 2)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("pc_tensor examples") {
  Matrix expected = Matrix::Zero(4, 4);
  expected.topLeftCorner(2, 2) = Matrix::Identity(2, 2);
  CHECK(max_diff(pc_tensor(Matrix::Identity(2, 2), 1), expected) == 0);
  CHECK(pc_tensor(Matrix::Zero(2, 2), 3).cwiseAbs().maxCoeff() == 0);
  const Matrix a = mat({{1, test::I}, {2, 3}});
  CHECK(max_diff(pc_tensor(a, 0), a) == 0);
}

TEST_CASE("circle shift is unitary") {
  const TruncatedOp u = circle_shift(2, 4);
  CHECK(u.degrees() == 9);
  CHECK(op_norm((u.matrix.adjoint() * u.matrix - Matrix::Identity(18, 18)).eval()) <= 1e-15);
  CHECK(u.interior_cols() == 2 * 8);
}
