#include "regtri/errors.hpp"

namespace regtri {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::DuplicateFace: return "DuplicateFace";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::BadLink: return "BadLink";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotADisc: return "NotADisc";
    case ErrorCode::ClosedSurface: return "ClosedSurface";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::LayerOutOfRange: return "LayerOutOfRange";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::InvalidDisk: return "InvalidDisk";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::InputContradictsLemma: return "InputContradictsLemma";
    case ErrorCode::UnsupportedInput: return "UnsupportedInput";
    case ErrorCode::NumericalDrift: return "NumericalDrift";
    case ErrorCode::InvalidFormat: return "InvalidFormat";
  }
  return "UnknownError";
}

}  // namespace regtri
