#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dser {

enum class ErrorCode {
  NotAUnit,
  NonMonomialDenominator,
  DescriptorMismatch,
  DimensionMismatch,
  NotInvertible,
  OutOfBounds,
  InvalidRank,
  IndexOutOfRange,
  UnsupportedVector,
  ConstraintViolated,
  NonComponentComposite,
  RankTooSmall,
  ParseError,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace dser
