// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mdgabor/error.hpp"

namespace mdg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ZeroIndex: return "ZeroIndex";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::ResolutionError: return "ResolutionError";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace mdg
