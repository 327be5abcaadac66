// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mdgabor/analysis.hpp"
#include "mdgabor/funcmodel.hpp"
#include "mdgabor/systems.hpp"

namespace mdg {

using json = nlohmann::json;

/// Throws InvalidConfig if `object` is not an object or has a key outside
/// `allowed`. `where` prefixes the message.
void require_keys(const json& object, std::initializer_list<std::string_view> allowed,
                  std::string_view where);

/// Generator descriptors:
///   {"type": "gaussian", "center", "width"}
///   {"type": "char_interval", "lo", "hi"}
///   {"type": "one_sided_exp", "rate"}
///   {"type": "hat", "center", "halfwidth"}
///   {"type": "table", "path"}
///   {"type": "scale", "re", "im", "of"}, {"type": "sum", "terms"},
///   {"type": "dilate", "a", "of"}, {"type": "translate", "c", "of"},
///   {"type": "modulate", "nu", "of"}, {"type": "md_modulate", "m", "b", "of"},
///   {"type": "warp", "b", "of"}, {"type": "unwarp", "b", "of"}
/// Primitives take an optional "domain" ("real_line" | "half_line"),
/// defaulting to `default_domain`. Table paths resolve against `base_dir`.
FuncExpr expr_from_json(const json& descriptor, Domain default_domain,
                        const std::filesystem::path& base_dir = {});
json expr_to_json(const FuncExpr& expr);

Domain domain_from_string(std::string_view s);
std::string domain_to_string(Domain d);

json range_to_json(const IndexRange& range);
IndexRange range_from_json(const json& j, std::string_view where);

/// {kind: "md"|"gabor", b, p, q, alpha, beta, generators, j_range|k_range, m_range}.
SystemSpec system_from_json(const json& j, const std::filesystem::path& base_dir = {});
json system_to_json(const SystemSpec& spec);

/// {lo, hi, n}; half-line grids carry "domain": "half_line".
Grid grid_from_json(const json& j, Domain default_domain = Domain::RealLine);
json grid_to_json(const Grid& grid);

json label_to_json(const ElementLabel& label);
json to_json(const GramReport& report);
json to_json(const FrameBoundsReport& report);
json to_json(const EquivalenceReport& report);
json to_json(const UncertaintyProduct& report);

/// `row,col,re,im` with 17 significant digits.
void write_matrix_csv(const Eigen::MatrixXcd& matrix, const std::string& path);

/// "%.17g": 17 significant digits, round-trippable. Used by every CSV writer.
std::string format_double(double value);

}  // namespace mdg
