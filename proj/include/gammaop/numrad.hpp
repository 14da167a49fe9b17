#pragma once

#include "gammaop/types.hpp"

namespace gammaop {

struct NumRadResult {
  Real value = 0;
  Real argmax_angle = 0;   // in [0, 2 pi)
  Vector certificate;      // unit vector with |<A h, h>| ~ value
};

struct NumRadOptions {
  Index grid = 720;
  Real angle_tol = 1e-12;
};

/// w(A) = max over theta of lambda_max((e^{i theta} A + e^{-i theta} A^*) / 2),
/// located on a uniform angle grid and refined by golden-section search on
/// the best bracket.
NumRadResult numerical_radius(const Matrix& a, const NumRadOptions& opts = {});

/// w(A) <= 1 + wr_slack.
bool numerical_radius_at_most_one(const Matrix& a, const Tolerance& tol = {});

}  // namespace gammaop
