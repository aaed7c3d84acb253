#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zlocus {

enum class ErrorCode {
  InvalidArgument,
  DegenerateQuadratic,
  ZeroConstantTerm,
  RepeatedRoot,
  ZeroRoot,
  IrrationalRoots,
  ZeroScale,
  ZeroProduct,
  ConstantPolynomial,
  AllZeroPolynomial,
  NonPositiveCoefficients,
  MixedSignPattern,
  WrongCase,
  EqualModulusRoots,
  EmptyRootSet,
  InsufficientCoefficients,
  OracleMismatch,
  SolverNotConverged,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateQuadratic: return "DegenerateQuadratic";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::RepeatedRoot: return "RepeatedRoot";
    case ErrorCode::ZeroRoot: return "ZeroRoot";
    case ErrorCode::IrrationalRoots: return "IrrationalRoots";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::ZeroProduct: return "ZeroProduct";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::AllZeroPolynomial: return "AllZeroPolynomial";
    case ErrorCode::NonPositiveCoefficients: return "NonPositiveCoefficients";
    case ErrorCode::MixedSignPattern: return "MixedSignPattern";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::EqualModulusRoots: return "EqualModulusRoots";
    case ErrorCode::EmptyRootSet: return "EmptyRootSet";
    case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::SolverNotConverged: return "SolverNotConverged";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported as an Error
/// carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zlocus
