#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kurank2 {

enum class ErrorCode {
  NotPrimitive,
  UnitVector,
  NonPositiveOrientation,
  Degenerate,
  NotNegative,
  Incompatible,
  FixedVector,
  NotInKuSpan,
  Uncovered,
  NonCertifiableEntry,
  ConditionFailed,
  ZeroClass,
  OutOfSextant,
  InvalidBranch,
  TooFewArrows,
  PreconditionFailed,
  BoundTooSmall,
  ExcludedSum,
  NotInS,
  Overflow,
  Parse,
  // internal: these mean a bug or a falsified theorem, never bad input
  OracleContradiction,
  IntegralityViolation,
  Unreachable,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }
  bool internal() const noexcept { return is_internal(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kurank2
