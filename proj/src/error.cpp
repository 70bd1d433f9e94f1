#include "verba/error.hpp"

namespace verba {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ZeroExponent: return "ZeroExponent";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAPGroup: return "NotAPGroup";
    case ErrorKind::NotWMaximal: return "NotWMaximal";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::BadSubspace: return "BadSubspace";
    case ErrorKind::SubspaceCountExceedsBudget: return "SubspaceCountExceedsBudget";
    case ErrorKind::ClassTooLarge: return "ClassTooLarge";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::PrimeTooLarge: return "PrimeTooLarge";
    case ErrorKind::PrecisionNotStabilized: return "PrecisionNotStabilized";
    case ErrorKind::NoFixedEigenvector: return "NoFixedEigenvector";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace verba
