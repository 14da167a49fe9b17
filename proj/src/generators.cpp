#include "gammaop/generators.hpp"

#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"

namespace gammaop {

Matrix random_gaussian(Rng& rng, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
  return m;
}

Matrix random_unitary(Rng& rng, Index n) {
  const Matrix g = random_gaussian(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix random_diagonal_unitary(Rng& rng, Index n) {
  Matrix u = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) u(i, i) = std::polar(Real(1), rng.uniform(0, 2 * std::numbers::pi));
  return u;
}

Matrix random_with_numerical_radius(Rng& rng, Index n, Real radius) {
  const Matrix g = random_gaussian(rng, n, n);
  const Real w = numerical_radius(g).value;
  return w > 0 ? Matrix(g * (radius / w)) : g;
}

Matrix random_with_norm(Rng& rng, Index n, Real norm) {
  const Matrix g = random_gaussian(rng, n, n);
  return g * (norm / op_norm(g));
}

OperatorPair coinvariant_compression(const Matrix& a, const std::vector<KernelPiece>& pieces) {
  Index dim = 0;
  for (const auto& piece : pieces) dim += piece.xi.cols();
  Matrix gram(dim, dim);
  Matrix s_adj = Matrix::Zero(dim, dim);  // S^* in the kernel basis
  Matrix p_adj = Matrix::Zero(dim, dim);  // P^* in the kernel basis

  Index row = 0;
  for (const auto& pi : pieces) {
    Index col = 0;
    for (const auto& pj : pieces) {
      // <k_{w_j}, k_{w_i}> = 1 / (1 - w_i conj(w_j))
      const Complex kernel = Real(1) / (Real(1) - pi.point * std::conj(pj.point));
      gram.block(row, col, pi.xi.cols(), pj.xi.cols()) = kernel * (pi.xi.adjoint() * pj.xi);
      col += pj.xi.cols();
    }
    const Index r = pi.xi.cols();
    const Matrix local = a.adjoint() + std::conj(pi.point) * a;
    s_adj.block(row, row, r, r) = pi.xi.adjoint() * local * pi.xi;
    p_adj.block(row, row, r, r) = std::conj(pi.point) * Matrix::Identity(r, r);
    row += r;
  }

  // With G = L L^*, the kernel vectors times L^{-*} are orthonormal and an
  // operator acting as T^* g = g M has matrix L^* M L^{-*} there.
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorKind::InvalidArgument, "coinvariant_compression: kernel vectors are dependent");
  const Matrix l = llt.matrixL();
  auto to_orthonormal = [&](const Matrix& m) {
    const Matrix y = l.triangularView<Eigen::Lower>().solve(m.adjoint()).adjoint();  // M L^{-*}
    return Matrix(l.adjoint() * y);
  };
  return make_operator_pair(to_orthonormal(s_adj).adjoint(), to_orthonormal(p_adj).adjoint());
}

OperatorPair random_gamma_contraction(Rng& rng, Index max_dim, Real max_point) {
  const Index sym = (max_dim >= 2 && rng.uniform() < 0.6) ? 2 : 1;
  const Real radius = rng.uniform() < 0.25 ? Real(1) : rng.uniform(0.3, 1.0);
  const Matrix a = random_with_numerical_radius(rng, sym, radius);

  std::vector<KernelPiece> pieces;
  Index dim = 0;
  const Index target = 1 + rng.index(max_dim);
  int attempts = 0;
  while (dim < target && attempts < 100) {
    ++attempts;
    const Complex w = rng.complex_disc(max_point);
    bool separated = true;
    for (const auto& p : pieces) separated = separated && std::abs(p.point - w) > 0.15;
    if (!separated) continue;
    KernelPiece piece{w, Matrix()};
    const bool full = sym == 1 || (dim + sym <= target && rng.uniform() < 0.5);
    if (full) {
      piece.xi = Matrix::Identity(sym, sym);
    } else {
      Eigen::ComplexEigenSolver<Matrix> es(a.adjoint() + std::conj(w) * a);
      piece.xi = es.eigenvectors().col(rng.index(sym)).normalized();
    }
    dim += piece.xi.cols();
    pieces.push_back(std::move(piece));
  }
  return coinvariant_compression(a, pieces);
}

SymbolPoly blaschke_potapov_factor(Rng& rng, Index dim, Index rank) {
  const Matrix w = random_unitary(rng, dim);
  const Matrix v = random_unitary(rng, dim).leftCols(rank);
  const Matrix q = v * v.adjoint();
  const Matrix id = Matrix::Identity(dim, dim);
  return SymbolPoly({w * (id - q), w * q});
}

}  // namespace gammaop
