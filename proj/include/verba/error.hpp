#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace verba {

enum class ErrorKind {
  OrderExceedsCap,
  InvalidAction,
  NotAGroup,
  NotNormal,
  SearchBudgetExceeded,
  SyntaxError,
  ZeroExponent,
  ArityMismatch,
  BudgetExceeded,
  CapExceeded,
  NotAPGroup,
  NotWMaximal,
  NotAntisymmetric,
  BadSubspace,
  SubspaceCountExceedsBudget,
  ClassTooLarge,
  EvenPrime,
  PrimeTooLarge,
  PrecisionNotStabilized,
  NoFixedEigenvector,
  InvalidArgument,
  InvalidSpec,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  /// Budget-type failures mean "unknown", never a wrong answer.
  [[nodiscard]] bool is_budget() const noexcept {
    return kind_ == ErrorKind::SearchBudgetExceeded ||
           kind_ == ErrorKind::BudgetExceeded ||
           kind_ == ErrorKind::CapExceeded ||
           kind_ == ErrorKind::OrderExceedsCap ||
           kind_ == ErrorKind::SubspaceCountExceedsBudget;
  }

 private:
  ErrorKind kind_;
};

/// A syntax error in the word DSL, with the 0-based offending offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace verba
