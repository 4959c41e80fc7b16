#pragma once

#include <stdexcept>
#include <string>

namespace condagg {

enum class ErrorCode {
  ParseError,
  MissingEmptySet,
  MissingFullSet,
  OutOfRangeIndex,
  NonZeroEmptySet,
  MonotonicityViolation,
  NegativeValue,
  ZeroFullSet,
  DivergentIntegral,
  GapOrOverlap,
  SetNotInCollection,
  NegativeComponent,
  DomainMismatch,
  PreconditionViolated,
  MeasureNotOnPowerset,
  BadLevels,
  InconsistentTargets,
  IndexOutOfRange,
  ZeroDivision,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail.empty()
                               ? std::string(error_code_name(code))
                               : std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}
  explicit Error(ErrorCode code) : Error(code, "") {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace condagg
