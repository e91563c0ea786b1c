#pragma once

#include <stdexcept>
#include <string>

namespace ginocchio {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain,
  Pole,
  NoConvergence,
  TransformDegenerate,
  NumericalOverflow,
  Unclassifiable,
  TailNotDecayed,
  Resolution,
  NearBoundary,
  PoorFit,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code drives the C API status
/// and the CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ginocchio
