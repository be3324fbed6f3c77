#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace delange {

using Complex = std::complex<double>;

enum class ErrorCode {
  PoleAtOne = 1,
  OutOfValidatedRange,
  OrderTooHigh,
  ZeroBase,
  TruncationMismatch,
  LogOfZeroConstantTerm,
  UnknownFamily,
  ParameterOutOfRange,
  NonconvergentProduct,
  DuplicatePrime,
  WindowTooLarge,
  InvalidWindow,
  OrderExceedsCoefficients,
  LindelofRequiresDeltaAboveOne,
  ParseError,
  BetaOutOfRange,
  NoAdmissibleCl,
  DegenerateBlock,
  NoClosedForm,
  QuadratureNotConverged,
  IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every domain failure in the library surfaces as this exception; the C API
// translates it to a status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace delange
