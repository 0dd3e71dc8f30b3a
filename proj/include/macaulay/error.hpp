#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace macaulay {

enum class ErrorCode {
  InvalidDegree,
  InvalidInput,
  InvalidRep,
  DegreeMismatch,
  CapacityExceeded,
  PreconditionViolated,
  InvariantViolated,
  ReplayDivergence,
  InsufficientVariables,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries an ErrorCode so front ends can
/// tell usage mistakes (bad input, unmet hypotheses) apart from internal
/// invariant failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by the caller's arguments.
  bool is_usage_error() const noexcept {
    switch (code_) {
      case ErrorCode::InvalidDegree:
      case ErrorCode::InvalidInput:
      case ErrorCode::InvalidRep:
      case ErrorCode::DegreeMismatch:
      case ErrorCode::PreconditionViolated:
      case ErrorCode::InsufficientVariables:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace macaulay
