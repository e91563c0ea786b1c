#include "ginocchio/error.hpp"

namespace ginocchio {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::NoConvergence: return "no convergence";
    case ErrorCode::TransformDegenerate: return "degenerate transformation";
    case ErrorCode::NumericalOverflow: return "numerical overflow";
    case ErrorCode::Unclassifiable: return "unclassifiable profile";
    case ErrorCode::TailNotDecayed: return "potential tail not decayed";
    case ErrorCode::Resolution: return "insufficient resolution";
    case ErrorCode::NearBoundary: return "too close to the map boundary";
    case ErrorCode::PoorFit: return "poor asymptotic fit";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace ginocchio
