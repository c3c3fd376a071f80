#pragma once

#include <stdexcept>
#include <string>

namespace regtri {

enum class ErrorCode {
  DegenerateFace,
  DuplicateFace,
  NonManifoldEdge,
  BadLink,
  UnknownVertex,
  NotADisc,
  ClosedSurface,
  NotClosed,
  NotRegular,
  Disconnected,
  DegreeTooSmall,
  ResourceLimit,
  LayerOutOfRange,
  PrecisionLoss,
  InvalidDisk,
  InternalInvariantViolation,
  InputContradictsLemma,
  UnsupportedInput,
  NumericalDrift,
  InvalidFormat,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for the whole library; the code identifies the
/// failure class, the message carries the offending ids/values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace regtri
