#include "gammaop/equivalence.hpp"

#include <deque>

#include "gammaop/linalg.hpp"

namespace gammaop {
namespace {

struct WordState {
  Matrix x;
  Matrix y;
  Index length;
};

Vector stacked(const Matrix& x, const Matrix& y) {
  Vector v(x.size() + y.size());
  v.head(x.size()) = x.reshaped();
  v.tail(y.size()) = y.reshaped();
  return v;
}

}  // namespace

EquivalenceReport joint_unitary_equiv(const std::vector<Matrix>& first, const std::vector<Matrix>& second,
                                      const EquivalenceOptions& opts) {
  if (first.size() != second.size() || first.empty())
    throw Error(ErrorKind::DimensionMismatch, "joint_unitary_equiv: tuples must have the same positive length");
  const Index n1 = first.front().rows();
  const Index n2 = second.front().rows();
  for (const auto& m : first)
    if (m.rows() != n1 || m.cols() != n1)
      throw Error(ErrorKind::DimensionMismatch, "joint_unitary_equiv: first tuple has mismatched dimensions");
  for (const auto& m : second)
    if (m.rows() != n2 || m.cols() != n2)
      throw Error(ErrorKind::DimensionMismatch, "joint_unitary_equiv: second tuple has mismatched dimensions");

  EquivalenceReport report;
  if (n1 != n2) {
    report.discrepancy = std::abs(Real(n1 - n2));
    return report;
  }
  const Index n = n1;
  report.max_word_len = opts.max_word_len > 0 ? opts.max_word_len : 2 * n * n;
  if (n == 0) {
    report.equivalent = true;
    return report;
  }

  Real scale = 0;
  for (std::size_t i = 0; i < first.size(); ++i) scale = std::max({scale, op_norm(first[i]), op_norm(second[i])});
  if (scale == 0) scale = 1;

  std::vector<std::pair<Matrix, Matrix>> letters;
  for (std::size_t i = 0; i < first.size(); ++i) {
    letters.emplace_back(first[i] / scale, second[i] / scale);
    letters.emplace_back(first[i].adjoint() / scale, second[i].adjoint() / scale);
  }

  const Index dim = 2 * n * n;
  Matrix kept(dim, 0);
  auto try_keep = [&](const Vector& v) {
    const Real norm = v.norm();
    if (norm < 1e-300) return false;
    Vector r = v;
    for (int pass = 0; pass < 2; ++pass) r -= kept * (kept.adjoint() * r);
    const Real rn = r.norm();
    if (rn <= opts.dependence_tol * norm || kept.cols() >= dim) return false;
    kept.conservativeResize(Eigen::NoChange, kept.cols() + 1);
    kept.col(kept.cols() - 1) = r / rn;
    return true;
  };

  std::deque<WordState> queue;
  const Matrix id = Matrix::Identity(n, n);
  try_keep(stacked(id, id));
  queue.push_back({id, id, 0});
  report.words_kept = 1;
  report.words_examined = 1;

  while (!queue.empty()) {
    WordState w = std::move(queue.front());
    queue.pop_front();
    if (w.length >= report.max_word_len) continue;
    for (const auto& [lx, ly] : letters) {
      WordState next{lx * w.x, ly * w.y, w.length + 1};
      ++report.words_examined;
      const Real diff = std::abs(next.x.trace() - next.y.trace()) / Real(n);
      report.discrepancy = std::max(report.discrepancy, diff);
      if (try_keep(stacked(next.x, next.y))) {
        ++report.words_kept;
        queue.push_back(std::move(next));
      }
    }
  }
  report.equivalent = report.discrepancy <= opts.tol;
  return report;
}

}  // namespace gammaop
