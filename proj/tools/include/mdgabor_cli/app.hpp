// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mdgabor/params.hpp"

namespace mdg::cli {

enum class Exit : int {
  Ok = 0,
  ToleranceFailure = 1,
  ValidationError = 2,
  NumericalFailure = 3,
};

struct RunOptions {
  std::filesystem::path config;
  /// Empty means "mdgabor_out"; params writes params.json only when set.
  std::filesystem::path out;
  std::optional<double> tol;
  unsigned threads = 0;
  bool timestamp = true;
};

/// Files produced by a command, written only after every computation
/// succeeded.
struct OutputSet {
  std::vector<std::pair<std::string, std::string>> files;

  void add(std::string name, std::string content) {
    files.emplace_back(std::move(name), std::move(content));
  }
  void write(const std::filesystem::path& dir) const;
};

/// First report line: "critical, a=2", "oversampled, a=1.4142135623730951" or
/// "undersampled; frame property impossible (density), a=8".
std::string params_headline(const DilationParams& params);

Exit cmd_params(double b, std::int64_t p, std::int64_t q, const RunOptions& options,
                std::ostream& out);
Exit cmd_generators(const RunOptions& options, std::ostream& out);
Exit cmd_verify(const RunOptions& options, std::ostream& out);
Exit cmd_frame_bounds(const RunOptions& options, std::ostream& out);
Exit cmd_density_scan(const RunOptions& options, std::ostream& out);
Exit cmd_uncertainty(const RunOptions& options, std::ostream& out);

/// Full command line front-end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mdg::cli
