#include "qet/error.hpp"

namespace qet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TooFewQubits: return "TooFewQubits";
    case ErrorCode::NonPositiveCoupling: return "NonPositiveCoupling";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::BellUndefinedForN2: return "BellUndefinedForN2";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::NonPositiveRatio: return "NonPositiveRatio";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::LinearAlgebraFailure: return "LinearAlgebraFailure";
  }
  return "Unknown";
}

}  // namespace qet
