#include "hmlf/error.hpp"

namespace hmlf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidAlphaBeta: return "InvalidAlphaBeta";
    case ErrorCode::LowerParamPole: return "LowerParamPole";
    case ErrorCode::DivergenceRejected: return "DivergenceRejected";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::InvalidS: return "InvalidS";
    case ErrorCode::FormalIdentity: return "FormalIdentity";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::GammaPole: return "GammaPole";
    case ErrorCode::MaxSubdivisions: return "MaxSubdivisions";
    case ErrorCode::AccelerationFailure: return "AccelerationFailure";
    case ErrorCode::DomainOutsideConvergence: return "DomainOutsideConvergence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hmlf
