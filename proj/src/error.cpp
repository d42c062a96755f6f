#include "extropy/error.hpp"

namespace extropy {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParamDomain: return "ParamDomainError";
    case ErrorCode::QuantileOutOfRange: return "QuantileOutOfRange";
    case ErrorCode::DegenerateTail: return "DegenerateTail";
    case ErrorCode::DegenerateHead: return "DegenerateHead";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::DivergentMean: return "DivergentMean";
    case ErrorCode::DivergentIntegral: return "DivergentIntegral";
    case ErrorCode::UnboundedSupport: return "UnboundedSupport";
    case ErrorCode::InvalidScale: return "InvalidScale";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::VanishingDensity: return "VanishingDensity";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InvalidSample: return "InvalidSample";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::Schema: return "SchemaError";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

}  // namespace extropy
