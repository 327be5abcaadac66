// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "config.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "mdgabor/error.hpp"

namespace mdg::cli {

void OutputSet::write(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create output directory " + dir.string());
  for (const auto& [name, content] : files) {
    const auto path = dir / name;
    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    stream << content;
    if (!stream) throw Error(ErrorCode::Io, "cannot write " + path.string());
  }
}

namespace detail {

void invalid(std::string_view where, const std::string& what) {
  throw Error(ErrorCode::InvalidConfig, std::string(where) + ": " + what);
}

json load_config(const RunOptions& options, std::initializer_list<std::string_view> allowed,
                 std::string_view command) {
  if (options.config.empty()) invalid(command, "--config is required");
  std::ifstream stream(options.config);
  if (!stream) invalid(command, "cannot read config " + options.config.string());
  json j;
  try {
    j = json::parse(stream);
  } catch (const json::parse_error& e) {
    invalid(command, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) invalid(command, "config must be a JSON object");
  if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer()) {
    invalid(command, "config needs an integer schema_version");
  }
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    invalid(command, "unsupported schema_version " + j.at("schema_version").dump());
  }
  for (const auto& item : j.items()) {
    if (item.key() == "schema_version") continue;
    bool known = false;
    for (auto key : allowed) known = known || item.key() == key;
    if (!known) invalid(command, "unknown field '" + item.key() + "'");
  }
  return j;
}

std::filesystem::path config_dir(const RunOptions& options) {
  return options.config.has_parent_path() ? options.config.parent_path() : std::filesystem::path(".");
}

const json& field(const json& j, const char* key, std::string_view where) {
  if (!j.contains(key)) invalid(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* key, std::string_view where) {
  const auto& v = field(j, key, where);
  if (!v.is_number()) invalid(where, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::optional<double> optional_number(const json& j, const char* key, std::string_view where) {
  if (!j.contains(key)) return std::nullopt;
  return number(j, key, where);
}

std::int64_t integer(const json& j, const char* key, std::string_view where) {
  const auto& v = field(j, key, where);
  if (!v.is_number_integer()) invalid(where, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

void stamp(json& report, const RunOptions& options) {
  if (!options.timestamp) return;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  report["generated_at"] = buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::filesystem::path out_dir(const RunOptions& options) {
  return options.out.empty() ? std::filesystem::path("mdgabor_out") : options.out;
}

ComputeOptions compute_options(const RunOptions& options) { return {.threads = options.threads}; }

}  // namespace detail
}  // namespace mdg::cli
