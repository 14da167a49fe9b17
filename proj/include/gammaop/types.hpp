#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace gammaop {

using Real = double;
using Complex = std::complex<Real>;
using Index = Eigen::Index;

// Every operator in the library is a dense complex matrix acting on a
// finite-dimensional (possibly truncated) Hilbert space.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Numerical thresholds shared by all modules.
///
/// `rank_tol` is relative to the largest singular value; the others are
/// absolute. `wr_slack` is the allowance in the numerical-radius test
/// w(A) <= 1.
struct Tolerance {
  Real rank_tol = 1e-10;
  Real residual_tol = 1e-9;
  Real convergence_tol = 1e-12;
  Real wr_slack = 1e-8;

  void validate() const;
};

enum class ErrorKind {
  NotHermitian,
  IndefiniteInput,
  DimensionMismatch,
  TruncationTooSmall,
  NotAContraction,
  NotCnu,
  ResolventSingular,
  NonConvergence,
  NotPureModelForm,
  NotCommuting,
  NotUnitary,
  ClassificationFailed,
  ResidualTooLarge,
  NotADilation,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gammaop
