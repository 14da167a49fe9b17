#include "gammaop/types.hpp"

namespace gammaop {

void Tolerance::validate() const {
  if (!(rank_tol > 0 && rank_tol < 1))
    throw Error(ErrorKind::InvalidArgument, "rank_tol must lie in (0, 1)");
  if (!(residual_tol > 0) || !(convergence_tol > 0) || !(wr_slack > 0))
    throw Error(ErrorKind::InvalidArgument, "tolerances must be strictly positive");
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::IndefiniteInput: return "IndefiniteInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NotAContraction: return "NotAContraction";
    case ErrorKind::NotCnu: return "NotCnu";
    case ErrorKind::ResolventSingular: return "ResolventSingular";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotPureModelForm: return "NotPureModelForm";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::ClassificationFailed: return "ClassificationFailed";
    case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorKind::NotADilation: return "NotADilation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gammaop
