#include "dser/errors.hpp"

namespace dser {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NonMonomialDenominator: return "NonMonomialDenominator";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedVector: return "UnsupportedVector";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NonComponentComposite: return "NonComponentComposite";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace dser
