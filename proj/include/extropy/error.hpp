#ifndef EXTROPY_ERROR_HPP_
#define EXTROPY_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace extropy {

enum class ErrorCode {
  ParamDomain,
  QuantileOutOfRange,
  DegenerateTail,
  DegenerateHead,
  OutsideSupport,
  DivergentMean,
  DivergentIntegral,
  UnboundedSupport,
  InvalidScale,
  InvalidOrder,
  InvalidGrid,
  VanishingDensity,
  EmptySample,
  InvalidSample,
  BadWeights,
  SupportMismatch,
  Schema,
  Io,
};

// Stable identifier used in CLI diagnostics, e.g. "DegenerateTail".
std::string_view to_string(ErrorCode code) noexcept;

// All domain failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace extropy

#endif  // EXTROPY_ERROR_HPP_
