#pragma once

#include <optional>

#include "gammaop/types.hpp"

namespace gammaop {

/// A pair (S, P) of square operators on the same space.
///
/// When the pair comes from truncated Hardy-space operators, `window` is the
/// number of leading coordinates (degree-major order) on which the operator
/// identities of the untruncated pair hold exactly. Checks that are sensitive
/// to truncation are evaluated on those columns only.
struct OperatorPair {
  Matrix S;
  Matrix P;
  Real commutator_norm = 0;
  std::optional<Index> window;

  Index dim() const { return P.rows(); }
};

/// Builds a pair and caches ||SP - PS|| (on the window columns when given).
OperatorPair make_operator_pair(Matrix s, Matrix p, std::optional<Index> window = std::nullopt);

/// The pair (S^*, P^*). The window is dropped, since adjoints of truncated
/// operators are exact on different coordinates.
OperatorPair adjoint_pair(const OperatorPair& pair);

/// Applies the unitary change of coordinates (U S U^*, U P U^*).
OperatorPair conjugate_pair(const OperatorPair& pair, const Matrix& u);

/// Orthogonal direct sum of two pairs. The result carries no window.
OperatorPair direct_sum(const OperatorPair& a, const OperatorPair& b);

/// Columns [0, window) of m, or all columns without a window.
Matrix window_cols(const Matrix& m, const std::optional<Index>& window);

}  // namespace gammaop
