#include "cubebrick/error.hpp"

namespace cubebrick {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::VolumeNotUnit: return "VolumeNotUnit";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidAspect: return "InvalidAspect";
    case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
  }
  return "Unknown";
}

}  // namespace cubebrick
