// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <CLI11.hpp>

#include "config.hpp"
#include "mdgabor/error.hpp"
#include "mdgabor_cli/app.hpp"

namespace mdg::cli {

namespace {

Exit exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularGram:
    case ErrorCode::ResolutionError:
    case ErrorCode::Io:
      return Exit::NumericalFailure;
    default:
      return Exit::ValidationError;
  }
}

struct ParamsArgs {
  double b = 0.0;
  std::int64_t p = 0;
  std::int64_t q = 0;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dilation-and-modulation systems on the half-line and their Gabor equivalents",
               "mdgabor"};
  app.require_subcommand(1);

  RunOptions options;
  double tol = 0.0;
  bool no_timestamp = false;
  std::vector<CLI::Option*> tol_options;
  auto common = [&](CLI::App* sub, bool needs_config) {
    auto* config = sub->add_option("--config", options.config, "JSON run configuration");
    if (needs_config) config->required();
    sub->add_option("--out", options.out, "Output directory (default mdgabor_out)");
    tol_options.push_back(sub->add_option("--tol", tol, "Tolerance override")->check(CLI::NonNegativeNumber));
    sub->add_option("--threads", options.threads, "Worker threads, 0 for all cores");
    sub->add_flag("--no-timestamp", no_timestamp, "Omit generated_at from reports");
  };

  ParamsArgs pa;
  auto* params = app.add_subcommand("params", "Report a, log_b(a) and the sampling regime");
  auto* b_opt = params->add_option("--b", pa.b, "Dilation base b > 1");
  auto* p_opt = params->add_option("--p", pa.p, "Numerator p of log_b(a)");
  auto* q_opt = params->add_option("--q", pa.q, "Denominator q of log_b(a)");
  common(params, false);

  auto* generators = app.add_subcommand("generators", "Sample the equivalent Gabor windows");
  common(generators, true);
  auto* verify = app.add_subcommand("verify", "Check the MD to Gabor equivalence");
  common(verify, true);
  auto* frame = app.add_subcommand("frame-bounds", "Estimate frame bounds of a truncated system");
  common(frame, true);
  auto* density = app.add_subcommand("density-scan", "Frame bounds and residuals over (p, q)");
  common(density, true);
  auto* uncertainty = app.add_subcommand("uncertainty", "Uncertainty products under refinement");
  common(uncertainty, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(Exit::ValidationError);
  }
  options.timestamp = !no_timestamp;
  for (auto* opt : tol_options) {
    if (opt->count() > 0) options.tol = tol;
  }

  try {
    Exit result = Exit::Ok;
    if (params->parsed()) {
      const bool flags = b_opt->count() + p_opt->count() + q_opt->count() > 0;
      if (flags == !options.config.empty()) {
        throw Error(ErrorCode::InvalidConfig, "params: give --b, --p, --q or --config, not both");
      }
      if (flags && (b_opt->count() == 0 || p_opt->count() == 0 || q_opt->count() == 0)) {
        throw Error(ErrorCode::InvalidConfig, "params: --b, --p and --q are all required");
      }
      if (!flags) {
        const json config = detail::load_config(options, {"b", "p", "q"}, "params");
        pa = {detail::number(config, "b", "params"), detail::integer(config, "p", "params"),
              detail::integer(config, "q", "params")};
      }
      result = cmd_params(pa.b, pa.p, pa.q, options, out);
    } else if (generators->parsed()) {
      result = cmd_generators(options, out);
    } else if (verify->parsed()) {
      result = cmd_verify(options, out);
    } else if (frame->parsed()) {
      result = cmd_frame_bounds(options, out);
    } else if (density->parsed()) {
      result = cmd_density_scan(options, out);
    } else if (uncertainty->parsed()) {
      result = cmd_uncertainty(options, out);
    }
    return static_cast<int>(result);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return static_cast<int>(exit_for(e.code()));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(Exit::NumericalFailure);
  }
}

}  // namespace mdg::cli
