#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spincert {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  LatticeMismatch,
  NotSymmetric,
  NotUnimodular,
  InconsistentSignature,
  NotCharacteristic,
  Mod8Violation,
  ParityViolation,
  EvenB2Plus,
  NotPolarization,
  InconsistentModel,
  InfiniteEnumeration,
  SearchExhausted,
  UnboundedDegree,
  UndecidableForm,
  OracleUnavailable,
  NonIsometry,
  NonCharacteristicImage,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spincert
