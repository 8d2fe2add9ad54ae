#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

/// Failure kinds raised as exceptions. Mathematical violations of an identity
/// are not errors; they are reported through `Check` results instead.
enum class ErrorCode {
  DivisionByZero,
  DimensionMismatch,
  FieldMismatch,
  WrongField,
  SingularMatrix,
  DegenerateForm,
  NotSymmetric,
  NotSkew,
  NotIndependent,
  NotInvolution,
  NotAntiInvolution,
  NotSubalgebra,
  NotDirectSum,
  NotRotaBaxter,
  NotSymplectic,
  NotQuadratic,
  NotInvariant,
  NotComplexStructure,
  NotComplexProduct,
  NotParaKahler,
  NotPseudoKahler,
  PhiIdentityFails,
  TooLarge,
  ParseError,
  ValidationError,
  UsageError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotAntiInvolution: return "NotAntiInvolution";
    case ErrorCode::NotSubalgebra: return "NotSubalgebra";
    case ErrorCode::NotDirectSum: return "NotDirectSum";
    case ErrorCode::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotComplexStructure: return "NotComplexStructure";
    case ErrorCode::NotComplexProduct: return "NotComplexProduct";
    case ErrorCode::NotParaKahler: return "NotParaKahler";
    case ErrorCode::NotPseudoKahler: return "NotPseudoKahler";
    case ErrorCode::PhiIdentityFails: return "PhiIdentityFails";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The text without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace leibniz
