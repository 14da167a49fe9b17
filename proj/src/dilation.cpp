#include "gammaop/dilation.hpp"

#include <sstream>

#include "gammaop/classify.hpp"
#include "gammaop/equivalence.hpp"
#include "gammaop/hardy.hpp"
#include "gammaop/linalg.hpp"
#include "gammaop/numrad.hpp"

namespace gammaop {
namespace {

void require_gamma_contraction(const OperatorPair& pair, const Tolerance& tol) {
  const ClassificationReport r = is_gamma_contraction(pair, tol);
  if (r.kind != GammaKind::GammaContraction) {
    std::ostringstream msg;
    msg << "pair is not a Gamma-contraction (" << to_string(r.kind) << ", w(F) = " << r.wA
        << ", residual = " << r.fundamental_residual << ")";
    throw Error(ErrorKind::ClassificationFailed, msg.str());
  }
}

Matrix block_diagonal(const Matrix& block, Index copies) {
  const Index b = block.rows();
  Matrix out = Matrix::Zero(b * copies, b * copies);
  for (Index k = 0; k < copies; ++k) out.block(k * b, k * b, b, b) = block;
  return out;
}

}  // namespace

OperatorPair SchafferPair::as_pair() const { return make_operator_pair(W, V, window()); }

SchafferPair schaffer_build(const OperatorPair& pair, Index n, const Tolerance& tol) {
  if (n < 2) throw Error(ErrorKind::TruncationTooSmall, "schaffer_build: N must be >= 2");
  require_gamma_contraction(pair, tol);
  const FundamentalOp f = fundamental_op(pair, tol);
  const DefectData d = defect_data(pair.P, tol);

  SchafferPair out;
  out.head_dim = pair.dim();
  out.defect_dim = d.rank_dP();
  out.n = n;
  out.A_used = f.F;
  const Index h = out.head_dim;
  const Index b = out.defect_dim;
  const Index total = h + b * (n + 1);

  const Matrix d_row = d.Q_dP.adjoint() * d.D_P;  // h -> D_P h in defect coordinates
  out.V = Matrix::Zero(total, total);
  out.V.topLeftCorner(h, h) = pair.P;
  out.V.block(h, 0, b, h) = d_row;
  out.V.bottomRightCorner(b * (n + 1), b * (n + 1)) = shift_op(b, n).matrix;

  out.W = Matrix::Zero(total, total);
  out.W.topLeftCorner(h, h) = pair.S;
  out.W.block(h, 0, b, h) = f.F.adjoint() * d_row;
  if (b > 0) out.W.bottomRightCorner(b * (n + 1), b * (n + 1)) = build_mult_op(SymbolPoly::pencil(f.F), n).matrix;

  out.embed = Matrix::Zero(total, h);
  out.embed.topRows(h) = Matrix::Identity(h, h);
  return out;
}

NfAyModel nf_ay_build(const OperatorPair& pair, Index n, const Tolerance& tol,
                      const std::optional<Matrix>& dstar_rotation) {
  require_gamma_contraction(pair, tol);
  require_cnu(pair.P, tol);
  if (n == 0) n = default_truncation(pair.P);

  NfAyModel out;
  out.model_space = build_model_space(pair.P, n, tol);
  const DefectData& d = out.model_space.theta.defect;
  const Index b = d.rank_dPstar();

  const Matrix rhs = pair.S.adjoint() - pair.S * pair.P.adjoint();
  const auto g = sandwich_solve(d.D_Pstar, d.D_Pstar, rhs, tol);
  out.symbol_A = (d.Q_dPstar.adjoint() * g.X * d.Q_dPstar).adjoint();

  out.dstar_rotation = Matrix::Identity(b, b);
  if (dstar_rotation) {
    const Matrix& w = *dstar_rotation;
    if (w.rows() != b || w.cols() != b)
      throw Error(ErrorKind::DimensionMismatch, "nf_ay_build: rotation must act on ran D_{P*}");
    if (op_norm((w.adjoint() * w - Matrix::Identity(b, b)).eval()) > tol.residual_tol)
      throw Error(ErrorKind::NotUnitary, "nf_ay_build: rotation is not unitary");
    // New coordinates c' = W^* c on every degree block.
    out.dstar_rotation = w;
    out.symbol_A = w.adjoint() * out.symbol_A * w;
    out.model_space.basis = block_diagonal(w.adjoint(), n + 1) * out.model_space.basis;
  }

  const Matrix& basis = out.model_space.basis;
  out.S_model = compress(build_mult_op(SymbolPoly::pencil(out.symbol_A), n), basis);
  out.P_model = compress(shift_op(b, n), basis);

  EquivalenceOptions eq;
  eq.tol = std::max(1e-8, 10 * out.model_space.trunc_error);
  out.residual_S = joint_unitary_equiv({out.S_model, out.P_model}, {pair.S, pair.P}, eq).discrepancy;
  out.residual_P = joint_unitary_equiv({out.P_model}, {pair.P}, eq).discrepancy;
  return out;
}

CompressedScalar compressed_scalar(const NfAyModel& model) {
  const ModelSpace& ms = model.model_space;
  CompressedScalar out;
  out.source_A = model.symbol_A;
  out.X = compress(block_diagonal(model.symbol_A, ms.n + 1), ms.basis);
  out.decompressed_wr = numerical_radius(model.symbol_A).value;
  out.residual = op_norm((model.S_model - (out.X + model.P_model * out.X.adjoint())).eval());
  const Real allowed = std::max(1e-8, 10 * ms.trunc_error);
  if (out.residual > allowed) {
    std::ostringstream msg;
    msg << "S = X + P X^* fails on the model space: residual " << out.residual << " > " << allowed;
    throw Error(ErrorKind::ResidualTooLarge, msg.str());
  }
  return out;
}

Matrix rederive_compressed_scalar(const Matrix& s, const Matrix& p) {
  const Index n = p.rows();
  const Matrix rhs = s.adjoint() - s * p.adjoint();
  // vec(P Y P^*) = (conj(P) (x) P) vec(Y)
  Matrix kron(n * n, n * n);
  const Matrix pc = p.conjugate();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) kron.block(i * n, j * n, n, n) = pc(i, j) * p;
  const Matrix system = Matrix::Identity(n * n, n * n) - kron;
  const Vector y = system.fullPivLu().solve(rhs.reshaped().eval());
  return y.reshaped(n, n).adjoint();
}

OperatorPair gamma_unitary_synth(const Matrix& u1, const Matrix& u2, const Tolerance& tol) {
  if (u1.rows() != u1.cols() || u2.rows() != u2.cols() || u1.rows() != u2.rows())
    throw Error(ErrorKind::DimensionMismatch, "gamma_unitary_synth: unitaries must be square of equal size");
  const Matrix id = Matrix::Identity(u1.rows(), u1.cols());
  for (const Matrix* u : {&u1, &u2})
    if (op_norm((u->adjoint() * *u - id).eval()) > tol.residual_tol ||
        op_norm((*u * u->adjoint() - id).eval()) > tol.residual_tol)
      throw Error(ErrorKind::NotUnitary, "gamma_unitary_synth: input is not unitary");
  if (op_norm((u1 * u2 - u2 * u1).eval()) > tol.residual_tol)
    throw Error(ErrorKind::NotCommuting, "gamma_unitary_synth: unitaries do not commute");
  return make_operator_pair(u1 + u2, u1 * u2);
}

NfDilation nf_dilation(const Matrix& p, Index n, Index pad, const Tolerance& tol) {
  const Matrix pi = pi_nf_matrix(p, n, tol);
  const Index b = pi.rows() / (n + 1);
  NfDilation out;
  out.V = shift_op(b, n + pad).matrix;
  out.embed = Matrix::Zero(b * (n + pad + 1), p.cols());
  out.embed.topRows(pi.rows()) = pi;
  return out;
}

FactorizationResult factorization_check(const Matrix& p, const Matrix& v, const Matrix& embed,
                                        const FactorizationOptions& opts, const Tolerance& tol) {
  if (v.rows() != v.cols() || embed.rows() != v.rows() || embed.cols() != p.cols())
    throw Error(ErrorKind::DimensionMismatch, "factorization_check: dilation dimensions do not match P");
  FactorizationResult out;
  out.dilation_residual = op_norm((v.adjoint() * embed - embed * p.adjoint()).eval());
  if (out.dilation_residual > opts.dilation_tol) {
    std::ostringstream msg;
    msg << "||V^* embed - embed P^*|| = " << out.dilation_residual;
    throw Error(ErrorKind::NotADilation, msg.str());
  }
  const Index h = p.cols();
  const Index depth = opts.depth > 0 ? opts.depth : (v.rows() + h - 1) / std::max<Index>(h, 1);
  const Index n = opts.nf_truncation > 0 ? opts.nf_truncation : default_truncation(p);
  const NfDilation nf = nf_dilation(p, n, depth, tol);

  const Index cols = h * (depth + 1);
  Matrix gen_nf(nf.V.rows(), cols);
  Matrix gen_other(v.rows(), cols);
  Matrix cur_nf = nf.embed;
  Matrix cur_other = embed;
  for (Index m = 0; m <= depth; ++m) {
    gen_nf.middleCols(m * h, h) = cur_nf;
    gen_other.middleCols(m * h, h) = cur_other;
    cur_nf = (nf.V * cur_nf).eval();
    cur_other = (v * cur_other).eval();
  }

  Tolerance span_tol = tol;
  span_tol.rank_tol = std::max(tol.rank_tol, 1e-8);
  const Matrix q = range_basis(gen_nf, span_tol);
  const Matrix coords = q.adjoint() * gen_nf;
  const Matrix phi_q = gen_other * pinv(coords, span_tol);
  out.Phi = phi_q * q.adjoint();
  out.domain_rank = q.cols();
  out.range_rank = range_basis(gen_other, span_tol).cols();
  out.isometry_residual = op_norm((phi_q.adjoint() * phi_q - Matrix::Identity(q.cols(), q.cols())).eval());

  const Real consistency = op_norm((out.Phi * gen_nf - gen_other).eval());
  const Matrix lower = gen_nf.leftCols(h * depth);
  const Real shift_form = op_norm((out.Phi * nf.V * lower - v * out.Phi * lower).eval());
  out.block_residual = std::max(consistency, shift_form);
  return out;
}

}  // namespace gammaop
