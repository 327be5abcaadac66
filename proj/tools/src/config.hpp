// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "mdgabor/serialize.hpp"
#include "mdgabor_cli/app.hpp"

namespace mdg::cli::detail {

inline constexpr int kSchemaVersion = 1;

/// Reads the config file, checks schema_version and the allowed top-level
/// keys ("schema_version" is always allowed).
json load_config(const RunOptions& options, std::initializer_list<std::string_view> allowed,
                 std::string_view command);

std::filesystem::path config_dir(const RunOptions& options);

[[noreturn]] void invalid(std::string_view where, const std::string& what);

const json& field(const json& j, const char* key, std::string_view where);
double number(const json& j, const char* key, std::string_view where);
std::optional<double> optional_number(const json& j, const char* key, std::string_view where);
std::int64_t integer(const json& j, const char* key, std::string_view where);

/// Adds "generated_at" unless timestamps are disabled.
void stamp(json& report, const RunOptions& options);

/// Pretty JSON with a trailing newline.
std::string dump(const json& j);

std::filesystem::path out_dir(const RunOptions& options);

ComputeOptions compute_options(const RunOptions& options);

}  // namespace mdg::cli::detail
