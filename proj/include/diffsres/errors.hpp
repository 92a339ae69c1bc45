#pragma once

#include <stdexcept>
#include <string>

namespace diffsres {

enum class ErrorCode {
  // input / grammar
  SyntaxError,
  UnknownSymbol,
  // algebraic domain
  DomainMismatch,
  DivisionByZero,
  DivisionByZeroOperator,
  ZeroOperator,
  ZeroOperand,
  BothConstant,
  InexactDivision,
  UnknownParameter,
  NonConstantValue,
  NonConstantResultant,
  ZeroInput,
  NotMonicInEitherVariable,
  DenominatorInIdeal,
  // shape / index
  NotSquare,
  IndexOutOfRange,
  RowsExceedCols,
  // spectral
  NotCommuting,
  // internal consistency
  VerificationFailed,
};

// Coarse grouping used for CLI exit codes.
enum class ErrorCategory { syntax, domain, range, not_commuting, internal };

const char* to_string(ErrorCode code);
ErrorCategory category_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace diffsres
