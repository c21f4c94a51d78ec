#include "spincert/error.hpp"

namespace spincert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::InconsistentSignature: return "InconsistentSignature";
    case ErrorCode::NotCharacteristic: return "NotCharacteristic";
    case ErrorCode::Mod8Violation: return "Mod8Violation";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::EvenB2Plus: return "EvenB2Plus";
    case ErrorCode::NotPolarization: return "NotPolarization";
    case ErrorCode::InconsistentModel: return "InconsistentModel";
    case ErrorCode::InfiniteEnumeration: return "InfiniteEnumeration";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::UnboundedDegree: return "UnboundedDegree";
    case ErrorCode::UndecidableForm: return "UndecidableForm";
    case ErrorCode::OracleUnavailable: return "OracleUnavailable";
    case ErrorCode::NonIsometry: return "NonIsometry";
    case ErrorCode::NonCharacteristicImage: return "NonCharacteristicImage";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace spincert
