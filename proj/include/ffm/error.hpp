#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffm {

enum class ErrorCode {
  NotPrime,
  DegreeZero,
  CapExceeded,
  NotIrreducible,
  DivisionByZero,
  NotASubfield,
  NotADivisor,
  ZeroHasNoLog,
  NotSquare,
  Singular,
  NotAUnit,
  NotInSubgroup,
  FieldMismatch,
  BadRepresentatives,
  ParityError,
  NotSymmetric,
  ZeroElement,
  NvmNotEstablished,
  ThresholdNotMet,
  NotHClosed,
  ZeroMembershipViolation,
  RangeViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; the code is what callers
// and tests should branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::ZeroHasNoLog: return "ZeroHasNoLog";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadRepresentatives: return "BadRepresentatives";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NvmNotEstablished: return "NvmNotEstablished";
    case ErrorCode::ThresholdNotMet: return "ThresholdNotMet";
    case ErrorCode::NotHClosed: return "NotHClosed";
    case ErrorCode::ZeroMembershipViolation: return "ZeroMembershipViolation";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ffm
