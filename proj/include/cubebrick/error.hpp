#pragma once

#include <stdexcept>
#include <string>

namespace cubebrick {

enum class ErrorCode {
  InvalidArgument,
  NonPositiveLength,
  VolumeNotUnit,
  OutOfDomain,
  DimensionMismatch,
  InvalidAspect,
  PrecisionExceeded,
  NotFound,
  SingularMatrix,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cubebrick
