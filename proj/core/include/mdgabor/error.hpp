// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdg {

enum class ErrorCode {
  NonFinite,
  OutOfRange,
  ZeroIndex,
  DomainError,
  DomainMismatch,
  IndexOutOfRange,
  ParamMismatch,
  DegenerateGrid,
  ResolutionError,
  SingularGram,
  InvalidConfig,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mdg
