#include "doctest.h"
#include "gammaop/classify.hpp"
#include "gammaop/generators.hpp"
#include "gammaop/hardy.hpp"
#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"
#include "gammaop/random.hpp"
#include "gammaop/suite.hpp"
#include "test_support.hpp"

using namespace gammaop;
using gammaop::test::max_diff;

TEST_CASE("generator is reproducible") {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.raw() == b.raw());
  Rng c(5);
  for (int i = 0; i < 1000; ++i) {
    const Real u = c.uniform();
    CHECK(u >= 0);
    CHECK(u < 1);
    CHECK(std::abs(c.complex_disc(0.7)) <= 0.7);
    const Index k = c.index(3);
    CHECK(k >= 0);
    CHECK(k < 3);
  }
  const auto first = generated_contractions(9, 3);
  const auto second = generated_contractions(9, 3);
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(max_diff(first[i].S, second[i].S) == 0);
}

TEST_CASE("random matrices have the requested size") {
  Rng rng(1);
  const Matrix u = random_unitary(rng, 4);
  CHECK(op_norm((u.adjoint() * u - Matrix::Identity(4, 4)).eval()) <= 1e-14);
  CHECK(numerical_radius(random_with_numerical_radius(rng, 3, 0.8)).value == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(op_norm(random_with_norm(rng, 3, 0.4)) == doctest::Approx(0.4).epsilon(1e-12));
  const SymbolPoly f = blaschke_potapov_factor(rng, 3, 2);
  for (int i = 0; i < 8; ++i) {
    const Matrix v = f.evaluate(std::polar(1.0, 0.8 * i));
    CHECK(op_norm((v.adjoint() * v - Matrix::Identity(3, 3)).eval()) <= 1e-13);
  }
}

TEST_CASE("co-invariant compression of the pure model") {
  // A single kernel piece at w with xi = I gives the scalar point (A^* + conj(w) A)^*, w.
  const Matrix a = test::mat({{0.2, 0.3}, {0, -0.1}});
  const Complex w(0.3, -0.2);
  const OperatorPair one = coinvariant_compression(a, {KernelPiece{w, Matrix::Identity(2, 2)}});
  CHECK(max_diff(one.S, (a.adjoint() + std::conj(w) * a).adjoint()) <= 1e-14);
  CHECK(max_diff(one.P, w * Matrix::Identity(2, 2)) <= 1e-14);

  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const OperatorPair pair = random_gamma_contraction(rng);
    CHECK(pair.dim() >= 1);
    CHECK(pair.dim() <= 4);
    CHECK(pair.commutator_norm <= 1e-12);
    CHECK(spectral_radius(pair.P) <= 0.7 + 1e-12);
    CHECK(is_gamma_contraction(pair).kind == GammaKind::GammaContraction);
  }
}
