#ifndef EXPPELL_ERROR_HPP
#define EXPPELL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace exppell {

enum class ErrorCode {
  NonzeroConstantExponent,
  IndexTooLarge,
  NotAPellSolution,
  NonIntegerCoefficients,
  DomainError,
  EvaluationOverflow,
  SyntaxError,
  BudgetExceeded,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonzeroConstantExponent: return "NonzeroConstantExponent";
    case ErrorCode::IndexTooLarge: return "IndexTooLarge";
    case ErrorCode::NotAPellSolution: return "NotAPellSolution";
    case ErrorCode::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EvaluationOverflow: return "EvaluationOverflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace exppell

#endif
