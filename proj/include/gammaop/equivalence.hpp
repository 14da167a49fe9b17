#pragma once

#include <vector>

#include "gammaop/types.hpp"

namespace gammaop {

struct EquivalenceOptions {
  /// Longest word compared. 0 selects 2 n^2.
  Index max_word_len = 0;
  /// Largest admissible |tr w(X) - tr w(Y)| / n after both tuples are scaled
  /// by the same factor so that every letter has norm <= 1.
  Real tol = 1e-8;
  /// Relative size below which a new word vector counts as dependent on the
  /// words already kept.
  Real dependence_tol = 1e-6;
};

struct EquivalenceReport {
  bool equivalent = false;
  Real discrepancy = 0;   // max normalised trace difference seen
  Index words_examined = 0;
  Index words_kept = 0;
  Index max_word_len = 0;
};

/// Trace-word test for joint unitary equivalence of two operator tuples.
///
/// Letters are the operators and their adjoints. Rather than enumerating all
/// 4^L words, the search keeps a word only when its pair of values
/// (w(X), w(Y)) is linearly independent of those already kept, and extends
/// only kept words. Trace differences are linear in that pair, so checking
/// every examined word covers the span of all words up to the length cap.
EquivalenceReport joint_unitary_equiv(const std::vector<Matrix>& first, const std::vector<Matrix>& second,
                                      const EquivalenceOptions& opts = {});

}  // namespace gammaop
