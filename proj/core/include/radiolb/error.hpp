#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radiolb {

enum class ErrorCode {
  UnknownLabel,
  MissingAction,
  InvalidNetwork,
  SpontaneityViolation,
  NonSourceRoundZero,
  InvalidTau,
  EnumerationTooLarge,
  StageMismatch,
  IndexOutOfUniverse,
  UniverseTooLarge,
  FreeComponentMissing,
  Parse,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every radiolb operation. The code identifies the
/// failure class; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace radiolb
