#include "ffirred/error.hpp"

namespace ffirred {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ModulusReducible: return "ModulusReducible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::NotIrreducibleFactor: return "NotIrreducibleFactor";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotADivisor: return "NotADivisor";
  }
  return "Unknown";
}

}  // namespace ffirred
