#include "fockbound/error.hpp"

namespace fockbound {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyAmplitudes: return "empty_amplitudes";
    case ErrorCode::ZeroNorm: return "zero_norm";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Truncation: return "truncation";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::NonConvergence: return "non_convergence";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace fockbound
