#include "ghrv/error.hpp"

namespace ghrv {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::Precondition: return "PreconditionError";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorCode::NotRegularSequence: return "NotRegularSequence";
    case ErrorCode::VariableLeak: return "VariableLeak";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotHomogeneousScalar: return "NotHomogeneousScalar";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Format: return "FormatError";
  }
  return "Error";
}

}  // namespace ghrv
