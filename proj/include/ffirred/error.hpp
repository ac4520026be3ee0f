#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ffirred {

enum class ErrorCode {
  NotPrime,
  ModulusReducible,
  DivisionByZero,
  FieldMismatch,
  NotCoprime,
  NotMonic,
  DegreeZero,
  ParseError,
  CoefficientOutOfRange,
  DimensionMismatch,
  Singular,
  CapExceeded,
  CapacityExceeded,
  NotIrreducibleFactor,
  NotPrimitive,
  NotADivisor,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what
/// callers (and the CLI) branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ffirred
