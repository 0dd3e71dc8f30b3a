#include "macaulay/error.hpp"

namespace macaulay {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDegree: return "invalid-degree";
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::InvalidRep: return "invalid-rep";
    case ErrorCode::DegreeMismatch: return "degree-mismatch";
    case ErrorCode::CapacityExceeded: return "capacity-exceeded";
    case ErrorCode::PreconditionViolated: return "precondition-violated";
    case ErrorCode::InvariantViolated: return "invariant-violated";
    case ErrorCode::ReplayDivergence: return "replay-divergence";
    case ErrorCode::InsufficientVariables: return "insufficient-variables";
  }
  return "unknown";
}

}  // namespace macaulay
