#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace puritylab {

enum class ErrorCode {
  NonPrimeCharacteristic,
  BadDimensions,
  NotAssociative,
  NotCommutative,
  NoUnit,
  NotLocal,
  NotNilpotentRadical,
  UnsupportedFamily,
  NotAModule,
  NotAHomomorphism,
  RingMismatch,
  BudgetExceeded,
  BadIdealGens,
  RangeViolation,
  HasFreeSummand,
  ParseError,
  UnknownName,
  BudgetCap,
  UnknownSuite,
  IoError,
  PostconditionViolated,
};

std::string_view errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace puritylab
