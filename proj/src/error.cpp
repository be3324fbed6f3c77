#include "delange/error.hpp"

namespace delange {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::OutOfValidatedRange: return "OutOfValidatedRange";
    case ErrorCode::OrderTooHigh: return "OrderTooHigh";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::LogOfZeroConstantTerm: return "LogOfZeroConstantTerm";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NonconvergentProduct: return "NonconvergentProduct";
    case ErrorCode::DuplicatePrime: return "DuplicatePrime";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::OrderExceedsCoefficients: return "OrderExceedsCoefficients";
    case ErrorCode::LindelofRequiresDeltaAboveOne: return "LindelofRequiresDeltaAboveOne";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::NoAdmissibleCl: return "NoAdmissibleCl";
    case ErrorCode::DegenerateBlock: return "DegenerateBlock";
    case ErrorCode::NoClosedForm: return "NoClosedForm";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace delange
