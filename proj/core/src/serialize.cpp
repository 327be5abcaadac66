// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mdgabor/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <type_traits>

#include "mdgabor/error.hpp"

namespace mdg {

namespace {

[[noreturn]] void invalid(std::string_view where, const std::string& what) {
  throw Error(ErrorCode::InvalidConfig, std::string(where) + ": " + what);
}

double get_number(const json& j, const char* key, std::string_view where) {
  if (!j.contains(key)) invalid(where, std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number()) invalid(where, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::int64_t get_integer(const json& j, const char* key, std::string_view where) {
  if (!j.contains(key)) invalid(where, std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) invalid(where, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

Domain primitive_domain(const json& j, Domain fallback, std::string_view where) {
  if (!j.contains("domain")) return fallback;
  if (!j.at("domain").is_string()) invalid(where, "domain must be a string");
  return domain_from_string(j.at("domain").get<std::string>());
}

json domain_field(const ExprNode& node) { return domain_to_string(node.domain); }

}  // namespace

void require_keys(const json& object, std::initializer_list<std::string_view> allowed,
                  std::string_view where) {
  if (!object.is_object()) invalid(where, "expected a JSON object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (auto key : allowed) known = known || item.key() == key;
    if (!known) invalid(where, "unknown field '" + item.key() + "'");
  }
}

Domain domain_from_string(std::string_view s) {
  if (s == "real_line") return Domain::RealLine;
  if (s == "half_line") return Domain::PositiveHalfLine;
  throw Error(ErrorCode::InvalidConfig, "unknown domain '" + std::string(s) + "'");
}

std::string domain_to_string(Domain d) { return d == Domain::RealLine ? "real_line" : "half_line"; }

FuncExpr expr_from_json(const json& d, Domain default_domain, const std::filesystem::path& base_dir) {
  constexpr std::string_view where = "generator";
  if (!d.is_object() || !d.contains("type") || !d.at("type").is_string()) {
    invalid(where, "descriptor needs a string 'type'");
  }
  const auto type = d.at("type").get<std::string>();
  const auto child = [&](Domain dom) {
    if (!d.contains("of")) invalid(where, "'" + type + "' needs an 'of' descriptor");
    return expr_from_json(d.at("of"), dom, base_dir);
  };

  if (type == "gaussian") {
    require_keys(d, {"type", "center", "width", "domain"}, where);
    return FuncExpr::gaussian(get_number(d, "center", where), get_number(d, "width", where),
                              primitive_domain(d, default_domain, where));
  }
  if (type == "char_interval") {
    require_keys(d, {"type", "lo", "hi", "domain"}, where);
    return FuncExpr::char_interval(get_number(d, "lo", where), get_number(d, "hi", where),
                                   primitive_domain(d, default_domain, where));
  }
  if (type == "one_sided_exp") {
    require_keys(d, {"type", "rate", "domain"}, where);
    return FuncExpr::one_sided_exp(get_number(d, "rate", where),
                                   primitive_domain(d, default_domain, where));
  }
  if (type == "hat") {
    require_keys(d, {"type", "center", "halfwidth", "domain"}, where);
    return FuncExpr::hat(get_number(d, "center", where), get_number(d, "halfwidth", where),
                         primitive_domain(d, default_domain, where));
  }
  if (type == "table") {
    require_keys(d, {"type", "path", "domain"}, where);
    if (!d.contains("path") || !d.at("path").is_string()) invalid(where, "table needs a string 'path'");
    const std::string raw = d.at("path").get<std::string>();
    const std::filesystem::path p(raw);
    const auto resolved = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
    auto table = std::make_shared<const SampledTable>(read_table_csv(resolved.string()));
    return FuncExpr::sampled(std::move(table), primitive_domain(d, default_domain, where), raw);
  }
  if (type == "scale") {
    require_keys(d, {"type", "re", "im", "of"}, where);
    const double im = d.contains("im") ? get_number(d, "im", where) : 0.0;
    return child(default_domain).scaled({get_number(d, "re", where), im});
  }
  if (type == "sum") {
    require_keys(d, {"type", "terms"}, where);
    if (!d.contains("terms") || !d.at("terms").is_array()) invalid(where, "sum needs a 'terms' array");
    std::vector<FuncExpr> terms;
    for (const auto& t : d.at("terms")) terms.push_back(expr_from_json(t, default_domain, base_dir));
    return FuncExpr::sum(terms);
  }
  if (type == "dilate") {
    require_keys(d, {"type", "a", "of"}, where);
    return child(default_domain).dilated(get_number(d, "a", where));
  }
  if (type == "translate") {
    require_keys(d, {"type", "c", "of"}, where);
    return child(default_domain).translated(get_number(d, "c", where));
  }
  if (type == "modulate") {
    require_keys(d, {"type", "nu", "of"}, where);
    return child(default_domain).modulated(get_number(d, "nu", where));
  }
  if (type == "md_modulate") {
    require_keys(d, {"type", "m", "b", "of"}, where);
    return child(default_domain).md_modulated(get_integer(d, "m", where), get_number(d, "b", where));
  }
  if (type == "warp") {
    require_keys(d, {"type", "b", "of"}, where);
    return warp_op(child(Domain::PositiveHalfLine), get_number(d, "b", where));
  }
  if (type == "unwarp") {
    require_keys(d, {"type", "b", "of"}, where);
    return unwarp_op(child(Domain::RealLine), get_number(d, "b", where));
  }
  invalid(where, "unknown type '" + type + "'");
}

json expr_to_json(const FuncExpr& expr) {
  const ExprNode& node = expr.node();
  return std::visit(
      [&node](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Gaussian>) {
          return {{"type", "gaussian"}, {"center", n.center}, {"width", n.width}, {"domain", domain_field(node)}};
        } else if constexpr (std::is_same_v<T, CharInterval>) {
          return {{"type", "char_interval"}, {"lo", n.lo}, {"hi", n.hi}, {"domain", domain_field(node)}};
        } else if constexpr (std::is_same_v<T, OneSidedExp>) {
          return {{"type", "one_sided_exp"}, {"rate", n.rate}, {"domain", domain_field(node)}};
        } else if constexpr (std::is_same_v<T, Hat>) {
          return {{"type", "hat"}, {"center", n.center}, {"halfwidth", n.halfwidth}, {"domain", domain_field(node)}};
        } else if constexpr (std::is_same_v<T, Table>) {
          if (n.source.empty()) {
            throw Error(ErrorCode::InvalidConfig, "in-memory tables have no descriptor; write the CSV first");
          }
          return {{"type", "table"}, {"path", n.source}, {"domain", domain_field(node)}};
        } else if constexpr (std::is_same_v<T, ScalarMulNode>) {
          return {{"type", "scale"}, {"re", n.c.real()}, {"im", n.c.imag()}, {"of", expr_to_json(n.child)}};
        } else if constexpr (std::is_same_v<T, SumNode>) {
          json terms = json::array();
          for (const auto& t : n.terms) terms.push_back(expr_to_json(t));
          return {{"type", "sum"}, {"terms", terms}};
        } else if constexpr (std::is_same_v<T, DilateNode>) {
          return {{"type", "dilate"}, {"a", n.a}, {"of", expr_to_json(n.child)}};
        } else if constexpr (std::is_same_v<T, TranslateNode>) {
          return {{"type", "translate"}, {"c", n.c}, {"of", expr_to_json(n.child)}};
        } else if constexpr (std::is_same_v<T, ModulateNode>) {
          return {{"type", "modulate"}, {"nu", n.nu}, {"of", expr_to_json(n.child)}};
        } else if constexpr (std::is_same_v<T, MdModulateNode>) {
          return {{"type", "md_modulate"}, {"m", n.m}, {"b", n.b}, {"of", expr_to_json(n.child)}};
        } else if constexpr (std::is_same_v<T, WarpNode>) {
          return {{"type", "warp"}, {"b", n.b}, {"of", expr_to_json(n.child)}};
        } else {
          return {{"type", "unwarp"}, {"b", n.b}, {"of", expr_to_json(n.child)}};
        }
      },
      node.kind);
}

json range_to_json(const IndexRange& range) { return json::array({range.lo, range.hi}); }

IndexRange range_from_json(const json& j, std::string_view where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    invalid(where, "expected [lo, hi] integer pair");
  }
  IndexRange r{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  if (r.hi < r.lo) invalid(where, "range is empty");
  return r;
}

SystemSpec system_from_json(const json& j, const std::filesystem::path& base_dir) {
  constexpr std::string_view where = "system";
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    invalid(where, "needs a string 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  const auto generators = [&](Domain d) {
    if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty()) {
      invalid(where, "needs a non-empty 'generators' array");
    }
    std::vector<FuncExpr> out;
    for (const auto& g : j.at("generators")) out.push_back(expr_from_json(g, d, base_dir));
    return out;
  };
  const auto range = [&](const char* key) {
    if (!j.contains(key)) invalid(where, std::string("missing field '") + key + "'");
    return range_from_json(j.at(key), std::string(where) + "." + key);
  };

  if (kind == "md") {
    require_keys(j, {"kind", "b", "p", "q", "alpha", "beta", "generators", "j_range", "m_range"}, where);
    MDSystemSpec spec{generators(Domain::PositiveHalfLine),
                      make_params(get_number(j, "b", where), get_integer(j, "p", where),
                                  get_integer(j, "q", where)),
                      range("j_range"), range("m_range")};
    // alpha and beta are implied for MD systems; accept them only if consistent.
    if (j.contains("alpha") && get_number(j, "alpha", where) != static_cast<double>(spec.params.p())) {
      invalid(where, "alpha of an MD system must equal the reduced p");
    }
    if (j.contains("beta") && get_number(j, "beta", where) != 1.0) {
      invalid(where, "beta of an MD system must be 1");
    }
    spec.validate();
    return spec;
  }
  if (kind == "gabor") {
    require_keys(j, {"kind", "b", "p", "q", "alpha", "beta", "generators", "k_range", "m_range"}, where);
    GaborSystemSpec spec{generators(Domain::RealLine), get_number(j, "alpha", where),
                         get_number(j, "beta", where), range("k_range"), range("m_range")};
    spec.validate();
    return spec;
  }
  invalid(where, "kind must be 'md' or 'gabor'");
}

json system_to_json(const SystemSpec& spec) {
  json out;
  json generators = json::array();
  if (const auto* md = std::get_if<MDSystemSpec>(&spec)) {
    for (const auto& g : md->generators) generators.push_back(expr_to_json(g));
    out = {{"kind", "md"},
           {"b", md->params.b()},
           {"p", md->params.p()},
           {"q", md->params.q()},
           {"alpha", static_cast<double>(md->params.p())},
           {"beta", 1.0},
           {"generators", generators},
           {"j_range", range_to_json(md->j_range)},
           {"m_range", range_to_json(md->m_range)}};
  } else {
    const auto& g = std::get<GaborSystemSpec>(spec);
    for (const auto& w : g.generators) generators.push_back(expr_to_json(w));
    out = {{"kind", "gabor"},
           {"alpha", g.alpha},
           {"beta", g.beta},
           {"generators", generators},
           {"k_range", range_to_json(g.k_range)},
           {"m_range", range_to_json(g.m_range)}};
  }
  return out;
}

Grid grid_from_json(const json& j, Domain default_domain) {
  constexpr std::string_view where = "grid";
  require_keys(j, {"lo", "hi", "n", "domain"}, where);
  const auto n = get_integer(j, "n", where);
  if (n < 2) invalid(where, "n must be at least 2");
  const Domain d = primitive_domain(j, default_domain, where);
  return Grid(get_number(j, "lo", where), get_number(j, "hi", where), static_cast<std::size_t>(n), d);
}

json grid_to_json(const Grid& grid) {
  json out = {{"lo", grid.lo()}, {"hi", grid.hi()}, {"n", grid.size()}};
  if (grid.domain() == Domain::PositiveHalfLine) out["domain"] = "half_line";
  return out;
}

json label_to_json(const ElementLabel& label) {
  return std::visit(
      [](const auto& idx) -> json {
        using T = std::decay_t<decltype(idx)>;
        if constexpr (std::is_same_v<T, MDIndex>) {
          return {{"window", idx.window}, {"j", idx.j}, {"m", idx.m}};
        } else {
          return {{"window", idx.window}, {"k", idx.k}, {"m", idx.m}};
        }
      },
      label);
}

json to_json(const GramReport& report) {
  json labels = json::array();
  for (const auto& l : report.labels) labels.push_back(label_to_json(l));
  return {{"size", report.matrix.rows()},
          {"grid", grid_to_json(report.grid)},
          {"max_asymmetry", report.max_asymmetry},
          {"labels", labels}};
}

json to_json(const FrameBoundsReport& report) {
  return {{"A_est", report.lower},
          {"B_est", report.upper},
          {"B_est_full", report.upper_full},
          {"method", to_string(report.method)},
          {"grid", grid_to_json(report.grid)},
          {"test_margin", report.test_margin},
          {"test_points", report.test_points},
          {"elements", report.elements},
          {"truncation", report.truncation}};
}

json to_json(const EquivalenceReport& report) {
  json out = {{"max_pointwise_deviation", report.max_pointwise_deviation},
              {"max_gram_deviation", report.max_gram_deviation},
              {"phase_convention", report.phase_convention},
              {"worst_pointwise", {{"index", label_to_json(report.worst_pointwise_index)},
                                   {"x", report.worst_pointwise_x}}},
              {"worst_gram", {{"row", label_to_json(report.worst_gram_row)},
                              {"col", label_to_json(report.worst_gram_col)}}},
              {"elements", report.elements},
              {"points_compared", report.points_compared},
              {"points_excluded", report.points_excluded}};
  if (report.halfline_gram_deviation) out["halfline_gram_deviation"] = *report.halfline_gram_deviation;
  return out;
}

json to_json(const UncertaintyProduct& report) {
  return {{"time_moment", report.time_moment},
          {"frequency_moment", report.frequency_moment},
          {"product", report.product}};
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_matrix_csv(const Eigen::MatrixXcd& matrix, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  out << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      out << r << ',' << c << ',' << format_double(matrix(r, c).real()) << ','
          << format_double(matrix(r, c).imag()) << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::Io, "write to " + path + " failed");
}

}  // namespace mdg
