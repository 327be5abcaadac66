// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <sstream>

#include "config.hpp"
#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"
#include "mdgabor/serialize.hpp"
#include "mdgabor_cli/app.hpp"

namespace mdg::cli {

using detail::dump;
using detail::invalid;

namespace {

std::string samples_csv(const FuncExpr& f, const Grid& grid) {
  std::string out = "x,re,im\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.point(i);
    const complex v = f(x);
    out += format_double(x) + ',' + format_double(v.real()) + ',' + format_double(v.imag()) + '\n';
  }
  return out;
}

MDSystemSpec md_system(const json& config, const RunOptions& options, std::string_view where) {
  auto spec = system_from_json(detail::field(config, "system", where), detail::config_dir(options));
  auto* md = std::get_if<MDSystemSpec>(&spec);
  if (md == nullptr) invalid(where, "system.kind must be 'md'");
  return *md;
}

json params_json(const DilationParams& params) {
  return {{"b", params.b()},
          {"p", params.p()},
          {"q", params.q()},
          {"a", params.a()},
          {"log_b_a", params.log_b_a()},
          {"reduced", params.reduced()},
          {"sampling", to_string(classify(params))}};
}

json gabor_summary(const GaborSystemSpec& g) {
  return {{"alpha", g.alpha},
          {"beta", g.beta},
          {"windows", g.generators.size()},
          {"k_range", range_to_json(g.k_range)},
          {"m_range", range_to_json(g.m_range)}};
}

std::string range_text(const IndexRange& r) {
  return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

}  // namespace

std::string params_headline(const DilationParams& params) {
  std::string head;
  switch (classify(params)) {
    case Sampling::Critical:
      head = "critical";
      break;
    case Sampling::Oversampled:
      head = "oversampled";
      break;
    case Sampling::Undersampled:
      head = "undersampled; frame property impossible (density)";
      break;
  }
  return head + ", a=" + format_double(params.a());
}

Exit cmd_params(double b, std::int64_t p, std::int64_t q, const RunOptions& options,
                std::ostream& out) {
  const auto params = make_params(b, p, q);
  out << params_headline(params) << '\n'
      << "b=" << format_double(params.b()) << " p=" << params.p() << " q=" << params.q()
      << (params.reduced() ? " (reduced)" : "") << '\n'
      << "log_b(a)=" << format_double(params.log_b_a()) << '\n';
  if (!options.out.empty()) {
    json report = params_json(params);
    report["schema_version"] = detail::kSchemaVersion;
    detail::stamp(report, options);
    OutputSet files;
    files.add("params.json", dump(report));
    files.write(options.out);
  }
  return Exit::Ok;
}

Exit cmd_generators(const RunOptions& options, std::ostream& out) {
  constexpr std::string_view where = "generators";
  const json config = detail::load_config(options, {"system", "grid"}, where);
  const MDSystemSpec spec = md_system(config, options, where);
  const Grid grid = grid_from_json(detail::field(config, "grid", where));
  if (grid.domain() != Domain::RealLine) invalid(where, "grid must be a real-line grid");

  const GaborSystemSpec gabor = md_to_gabor(spec);
  const auto q = spec.params.q();
  OutputSet files;
  json windows = json::array();
  for (std::size_t l = 0; l < spec.generators.size(); ++l) {
    for (std::int64_t r = 0; r < q; ++r) {
      const std::size_t index = gabor_window_index(l, r, q);
      const std::string name = "window_" + std::to_string(l) + "_" + std::to_string(r) + ".csv";
      files.add(name, samples_csv(gabor.generators[index], grid));
      windows.push_back({{"index", index},
                         {"md_window", l},
                         {"r", r},
                         {"dilation", spec.params.a_pow(r)},
                         {"file", name},
                         {"descriptor", expr_to_json(gabor.generators[index])}});
    }
  }
  json manifest = {{"schema_version", detail::kSchemaVersion},
                   {"params", params_json(spec.params)},
                   {"j_range", range_to_json(spec.j_range)},
                   {"gabor", gabor_summary(gabor)},
                   {"grid", grid_to_json(grid)},
                   {"windows", windows}};
  detail::stamp(manifest, options);
  files.add("generators.json", dump(manifest));
  files.write(detail::out_dir(options));

  out << "windows=" << gabor.generators.size() << " alpha=" << format_double(gabor.alpha)
      << " beta=" << format_double(gabor.beta) << '\n'
      << "j_range=" << range_text(spec.j_range) << " k_range=" << range_text(gabor.k_range)
      << " m_range=" << range_text(gabor.m_range) << '\n';
  return Exit::Ok;
}

Exit cmd_verify(const RunOptions& options, std::ostream& out) {
  constexpr std::string_view where = "verify";
  const json config = detail::load_config(
      options, {"system", "grid_realline", "grid_halfline", "tolerances", "apply_phase", "breakpoint_exclusion"},
      where);
  const MDSystemSpec spec = md_system(config, options, where);
  const Grid real = grid_from_json(detail::field(config, "grid_realline", where));
  std::optional<Grid> half;
  if (config.contains("grid_halfline")) {
    half = grid_from_json(config.at("grid_halfline"), Domain::PositiveHalfLine);
  }
  double tol_pointwise = 1e-9;
  double tol_gram = 1e-8;
  if (config.contains("tolerances")) {
    const auto& t = config.at("tolerances");
    require_keys(t, {"pointwise", "gram"}, "verify.tolerances");
    tol_pointwise = detail::optional_number(t, "pointwise", "verify.tolerances").value_or(tol_pointwise);
    tol_gram = detail::optional_number(t, "gram", "verify.tolerances").value_or(tol_gram);
  }
  if (options.tol) tol_pointwise = tol_gram = *options.tol;
  if (!(tol_pointwise >= 0.0) || !(tol_gram >= 0.0)) invalid(where, "tolerances must be non-negative");
  EquivalenceOptions eq;
  if (config.contains("apply_phase")) {
    if (!config.at("apply_phase").is_boolean()) invalid(where, "apply_phase must be a boolean");
    eq.apply_phase = config.at("apply_phase").get<bool>();
  }
  eq.breakpoint_exclusion =
      detail::optional_number(config, "breakpoint_exclusion", where).value_or(eq.breakpoint_exclusion);

  const EquivalenceReport report = equivalence_report(spec, half, real, eq, detail::compute_options(options));
  const bool pass = report.max_pointwise_deviation <= tol_pointwise && report.max_gram_deviation <= tol_gram;

  json result = {{"schema_version", detail::kSchemaVersion},
                 {"system", system_to_json(spec)},
                 {"gabor", gabor_summary(md_to_gabor(spec))},
                 {"report", to_json(report)},
                 {"tolerances", {{"pointwise", tol_pointwise}, {"gram", tol_gram}}},
                 {"pass", pass}};
  detail::stamp(result, options);
  OutputSet files;
  files.add("verify.json", dump(result));
  files.write(detail::out_dir(options));

  out << (pass ? "PASS" : "FAIL") << " max_pointwise_deviation=" << format_double(report.max_pointwise_deviation)
      << " max_gram_deviation=" << format_double(report.max_gram_deviation) << '\n';
  return pass ? Exit::Ok : Exit::ToleranceFailure;
}

Exit cmd_frame_bounds(const RunOptions& options, std::ostream& out) {
  constexpr std::string_view where = "frame-bounds";
  const json config =
      detail::load_config(options, {"system", "grid", "window", "test_margin", "method"}, where);
  const SystemSpec spec = system_from_json(detail::field(config, "system", where), detail::config_dir(options));
  if (config.contains("grid") == config.contains("window")) {
    invalid(where, "give exactly one of 'grid' or 'window'");
  }
  const double margin = detail::optional_number(config, "test_margin", where).value_or(0.5);
  FrameMethod method = FrameMethod::FrameOperatorEigs;
  if (config.contains("method")) {
    const auto& m = config.at("method");
    if (m == "frame_operator_eigs") {
      method = FrameMethod::FrameOperatorEigs;
    } else if (m == "gram_eigs") {
      method = FrameMethod::GramEigs;
    } else {
      invalid(where, "method must be 'frame_operator_eigs' or 'gram_eigs'");
    }
  }
  Grid grid = Grid(0.0, 1.0, 2);
  if (config.contains("grid")) {
    grid = grid_from_json(config.at("grid"));
  } else {
    const auto& w = config.at("window");
    if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number() ||
        !(w[1].get<double>() > w[0].get<double>())) {
      invalid(where, "window must be [lo, hi] with hi > lo");
    }
    grid = matched_grid(spec, w[0].get<double>(), w[1].get<double>());
  }
  if (!(margin > 0.0 && margin < 1.0)) invalid(where, "test_margin must lie in (0, 1)");

  const FrameBoundsReport report = frame_bounds_estimate(spec, grid, margin, method, detail::compute_options(options));
  json result = {{"schema_version", detail::kSchemaVersion},
                 {"system", system_to_json(spec)},
                 {"report", to_json(report)}};
  detail::stamp(result, options);
  OutputSet files;
  files.add("frame_bounds.json", dump(result));
  files.write(detail::out_dir(options));

  out << "A_est=" << format_double(report.lower) << " B_est=" << format_double(report.upper)
      << " B_est_full=" << format_double(report.upper_full) << '\n';
  return Exit::Ok;
}

Exit cmd_density_scan(const RunOptions& options, std::ostream& out) {
  constexpr std::string_view where = "density-scan";
  const json config = detail::load_config(
      options, {"b", "generators", "pairs", "j_range", "m_range", "window", "test_margin", "probe", "residual_grid"},
      where);
  const auto base = detail::config_dir(options);
  const double b = detail::number(config, "b", where);
  const auto& gens = detail::field(config, "generators", where);
  if (!gens.is_array() || gens.empty()) invalid(where, "generators must be a non-empty array");
  std::vector<FuncExpr> generators;
  for (const auto& g : gens) generators.push_back(expr_from_json(g, Domain::PositiveHalfLine, base));
  const IndexRange j_range = range_from_json(detail::field(config, "j_range", where), "density-scan.j_range");
  const IndexRange m_range = range_from_json(detail::field(config, "m_range", where), "density-scan.m_range");
  const FuncExpr probe = expr_from_json(detail::field(config, "probe", where), Domain::PositiveHalfLine, base);
  if (probe.domain() != Domain::PositiveHalfLine) invalid(where, "probe must live on the half-line");
  const double margin = detail::optional_number(config, "test_margin", where).value_or(0.5);
  if (!(margin > 0.0 && margin < 1.0)) invalid(where, "test_margin must lie in (0, 1)");
  const auto& w = detail::field(config, "window", where);
  if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number() ||
      !(w[1].get<double>() > w[0].get<double>())) {
    invalid(where, "window must be [lo, hi] with hi > lo");
  }
  std::optional<Grid> residual_grid;
  if (config.contains("residual_grid")) residual_grid = grid_from_json(config.at("residual_grid"));

  const auto& pairs = detail::field(config, "pairs", where);
  if (!pairs.is_array() || pairs.empty()) invalid(where, "pairs must be a non-empty array");
  std::vector<MDSystemSpec> specs;
  for (const auto& pq : pairs) {
    if (!pq.is_array() || pq.size() != 2 || !pq[0].is_number_integer() || !pq[1].is_number_integer()) {
      invalid(where, "each pair must be [p, q] integers");
    }
    MDSystemSpec spec{generators, make_params(b, pq[0].get<std::int64_t>(), pq[1].get<std::int64_t>()),
                      j_range, m_range};
    spec.validate();
    specs.push_back(std::move(spec));
  }

  const auto compute = detail::compute_options(options);
  std::ostringstream csv;
  csv << "p,q,log_b_a,sampling,A_est,B_est,B_est_full,residual,probe_norm\n";
  for (const auto& spec : specs) {
    const SystemSpec system{spec};
    const Grid grid = matched_grid(system, w[0].get<double>(), w[1].get<double>());
    const FrameBoundsReport fb = frame_bounds_estimate(system, grid, margin, FrameMethod::FrameOperatorEigs, compute);
    const Grid& rgrid = residual_grid ? *residual_grid : grid;
    const double residual = projection_residual(probe, system, rgrid, compute);
    const FuncExpr warped = rgrid.domain() == Domain::RealLine ? warp_op(probe, b) : probe;
    const double norm = std::sqrt(inner_product(warped, warped, rgrid).real());
    csv << spec.params.p() << ',' << spec.params.q() << ',' << format_double(spec.params.log_b_a()) << ','
        << to_string(classify(spec.params)) << ',' << format_double(fb.lower) << ','
        << format_double(fb.upper) << ',' << format_double(fb.upper_full) << ','
        << format_double(residual) << ',' << format_double(norm) << '\n';
    out << "p=" << spec.params.p() << " q=" << spec.params.q() << " A_est=" << format_double(fb.lower)
        << " B_est=" << format_double(fb.upper) << " residual=" << format_double(residual) << '\n';
  }

  json meta = {{"schema_version", detail::kSchemaVersion},
               {"b", b},
               {"j_range", range_to_json(j_range)},
               {"m_range", range_to_json(m_range)},
               {"window", w},
               {"test_margin", margin},
               {"probe", expr_to_json(probe)},
               {"table", "density_scan.csv"}};
  if (residual_grid) meta["residual_grid"] = grid_to_json(*residual_grid);
  detail::stamp(meta, options);
  OutputSet files;
  files.add("density_scan.csv", csv.str());
  files.add("density_scan.json", dump(meta));
  files.write(detail::out_dir(options));
  return Exit::Ok;
}

Exit cmd_uncertainty(const RunOptions& options, std::ostream& out) {
  constexpr std::string_view where = "uncertainty";
  const json config = detail::load_config(options, {"windows", "lo", "hi", "sizes"}, where);
  const auto base = detail::config_dir(options);
  const double lo = detail::number(config, "lo", where);
  const double hi = detail::number(config, "hi", where);
  const auto& sizes = detail::field(config, "sizes", where);
  if (!sizes.is_array() || sizes.empty()) invalid(where, "sizes must be a non-empty array");
  std::vector<std::size_t> ns;
  for (const auto& n : sizes) {
    if (!n.is_number_unsigned() || n.get<std::size_t>() < 2) invalid(where, "sizes must be integers >= 2");
    ns.push_back(n.get<std::size_t>());
  }
  struct Window {
    std::string name;
    FuncExpr g;
    double u;
    double eta;
  };
  std::vector<Window> windows;
  const auto& ws = detail::field(config, "windows", where);
  if (!ws.is_array() || ws.empty()) invalid(where, "windows must be a non-empty array");
  for (const auto& w : ws) {
    require_keys(w, {"name", "g", "u", "eta"}, "uncertainty.windows");
    const auto& name = detail::field(w, "name", "uncertainty.windows");
    if (!name.is_string()) invalid("uncertainty.windows", "name must be a string");
    FuncExpr g = expr_from_json(detail::field(w, "g", "uncertainty.windows"), Domain::RealLine, base);
    if (g.domain() != Domain::RealLine) invalid("uncertainty.windows", "window must live on the real line");
    windows.push_back({name.get<std::string>(), std::move(g),
                       detail::optional_number(w, "u", "uncertainty.windows").value_or(0.0),
                       detail::optional_number(w, "eta", "uncertainty.windows").value_or(0.0)});
  }
  std::vector<Grid> grids;
  for (auto n : ns) grids.emplace_back(lo, hi, n);

  std::ostringstream csv;
  csv << "window,n,step,time_moment,frequency_moment,product,ratio\n";
  for (const auto& w : windows) {
    double prev = 0.0;
    for (const auto& grid : grids) {
      const UncertaintyProduct r = uncertainty_product(w.g, w.u, w.eta, grid);
      const double ratio = prev > 0.0 ? r.product / prev : 1.0;
      csv << w.name << ',' << grid.size() << ',' << format_double(grid.step()) << ','
          << format_double(r.time_moment) << ',' << format_double(r.frequency_moment) << ','
          << format_double(r.product) << ',' << format_double(ratio) << '\n';
      out << w.name << " n=" << grid.size() << " product=" << format_double(r.product) << '\n';
      prev = r.product;
    }
  }
  json meta = {{"schema_version", detail::kSchemaVersion},
               {"lo", lo},
               {"hi", hi},
               {"sizes", sizes},
               {"table", "uncertainty.csv"}};
  json wj = json::array();
  for (const auto& w : windows) {
    wj.push_back({{"name", w.name}, {"g", expr_to_json(w.g)}, {"u", w.u}, {"eta", w.eta}});
  }
  meta["windows"] = wj;
  detail::stamp(meta, options);
  OutputSet files;
  files.add("uncertainty.csv", csv.str());
  files.add("uncertainty.json", dump(meta));
  files.write(detail::out_dir(options));
  return Exit::Ok;
}

}  // namespace mdg::cli
