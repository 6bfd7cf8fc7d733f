#include "radiolb/error.hpp"

namespace radiolb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::MissingAction: return "MissingAction";
    case ErrorCode::InvalidNetwork: return "InvalidNetwork";
    case ErrorCode::SpontaneityViolation: return "SpontaneityViolation";
    case ErrorCode::NonSourceRoundZero: return "NonSourceRoundZero";
    case ErrorCode::InvalidTau: return "InvalidTau";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::StageMismatch: return "StageMismatch";
    case ErrorCode::IndexOutOfUniverse: return "IndexOutOfUniverse";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::FreeComponentMissing: return "FreeComponentMissing";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace radiolb
