#include "diffsres/errors.hpp"

namespace diffsres {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DivisionByZeroOperator: return "DivisionByZeroOperator";
    case ErrorCode::ZeroOperator: return "ZeroOperator";
    case ErrorCode::ZeroOperand: return "ZeroOperand";
    case ErrorCode::BothConstant: return "BothConstant";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::UnknownParameter: return "UnknownParameter";
    case ErrorCode::NonConstantValue: return "NonConstantValue";
    case ErrorCode::NonConstantResultant: return "NonConstantResultant";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotMonicInEitherVariable: return "NotMonicInEitherVariable";
    case ErrorCode::DenominatorInIdeal: return "DenominatorInIdeal";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RowsExceedCols: return "RowsExceedCols";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "UnknownError";
}

ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownSymbol:
      return ErrorCategory::syntax;
    case ErrorCode::NotSquare:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::RowsExceedCols:
      return ErrorCategory::range;
    case ErrorCode::NotCommuting:
      return ErrorCategory::not_commuting;
    case ErrorCode::VerificationFailed:
      return ErrorCategory::internal;
    default:
      return ErrorCategory::domain;
  }
}

}  // namespace diffsres
