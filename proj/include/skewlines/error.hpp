#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewlines {

enum class ErrorCode {
  NonPrime,
  FieldTooLarge,
  InvalidModulus,
  DivideByZero,
  DuplicateLine,
  OffSurfaceLine,
  SameLine,
  CountMismatch,
  EmptyInput,
  PreconditionViolated,
  EmptyPivotPool,
  InvalidStabilizer,
  ClosureCapExceeded,
  DegreeMismatch,
  NotAnAutomorphism,
  NotFound,
  NotSkewTriple,
  NotSkew,
  DegenerateQuadric,
  ChordCountMismatch,
  PairingFailure,
  CrossLineOffSurface,
  NotSkewInternal,
  ConfigCountMismatch,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skewlines
