#include "pgrowth/error.h"

namespace pgrowth {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::BadVertex: return "BadVertex";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::StateSpaceBudgetExceeded: return "StateSpaceBudgetExceeded";
    case ErrorKind::DepthBudgetExceeded: return "DepthBudgetExceeded";
    case ErrorKind::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::NoCoset: return "NoCoset";
    case ErrorKind::AmbiguousTransversal: return "AmbiguousTransversal";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonSymmetricRequired: return "NonSymmetricRequired";
    case ErrorKind::ExactDivisionFailure: return "ExactDivisionFailure";
    case ErrorKind::EmptySeries: return "EmptySeries";
    case ErrorKind::RatioBoundViolated: return "RatioBoundViolated";
    case ErrorKind::PrecisionInsufficient: return "PrecisionInsufficient";
  }
  return "Error";
}

}  // namespace pgrowth
