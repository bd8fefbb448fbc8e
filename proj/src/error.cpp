#include "puritylab/error.hpp"

namespace puritylab {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::NotNilpotentRadical: return "NotNilpotentRadical";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NotAModule: return "NotAModule";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadIdealGens: return "BadIdealGens";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::HasFreeSummand: return "HasFreeSummand";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BudgetCap: return "BudgetCap";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::PostconditionViolated: return "PostconditionViolated";
  }
  return "Unknown";
}

}  // namespace puritylab
