// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"
#include "parallel.hpp"

namespace mdg {

namespace {

struct PointwiseWorst {
  double deviation = 0.0;
  double x = 0.0;
  std::size_t compared = 0;
};

}  // namespace

EquivalenceReport equivalence_report(const MDSystemSpec& spec,
                                     const std::optional<Grid>& grid_halfline,
                                     const Grid& grid_realline, const EquivalenceOptions& options,
                                     const ComputeOptions& compute) {
  spec.validate();
  if (grid_realline.domain() != Domain::RealLine) {
    throw Error(ErrorCode::DomainMismatch, "equivalence needs a real-line grid");
  }
  if (grid_halfline && grid_halfline->domain() != Domain::PositiveHalfLine) {
    throw Error(ErrorCode::DomainMismatch, "grid_halfline must be a half-line grid");
  }

  const GaborSystemSpec gabor = md_to_gabor(spec);
  const auto labels = enumerate(spec);
  const auto xs = grid_realline.points();
  const auto w = grid_realline.weights();
  const auto n = static_cast<Eigen::Index>(xs.size());
  const auto count = static_cast<Eigen::Index>(labels.size());
  const double b = spec.params.b();

  std::vector<bool> compare(xs.size());
  std::size_t excluded = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    compare[i] = std::abs(xs[i] - std::nearbyint(xs[i])) > options.breakpoint_exclusion;
    if (!compare[i]) ++excluded;
  }

  Eigen::MatrixXcd md_side(n, count);
  Eigen::MatrixXcd gabor_side(n, count);
  std::vector<complex> phases(labels.size());
  std::vector<PointwiseWorst> worst(labels.size());

  detail::parallel_for(labels.size(), compute, [&](std::size_t u) {
    const MDIndex& idx = labels[u];
    const IndexPhaseMap map = md_index_to_gabor_index(idx.j, idx.m, idx.window, spec.params);
    const complex c = options.apply_phase ? map.phase : complex(1.0);
    phases[u] = c;

    const FuncExpr lhs = warp_op(md_element(spec, idx.j, idx.m, idx.window), b);
    const FuncExpr rhs = gabor_element(gabor, map.target.k, map.target.m, map.target.window);
    const auto col = static_cast<Eigen::Index>(u);
    PointwiseWorst& wu = worst[u];
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const complex l = lhs(xs[i]);
      const complex r = rhs(xs[i]);
      md_side(static_cast<Eigen::Index>(i), col) = l;
      gabor_side(static_cast<Eigen::Index>(i), col) = r;
      if (!compare[i]) continue;
      ++wu.compared;
      const double dev = std::abs(l - c * r);
      if (dev > wu.deviation) {
        wu.deviation = dev;
        wu.x = xs[i];
      }
    }
  });

  EquivalenceReport report;
  report.phase_convention = options.apply_phase
                                ? "c(j,m) = exp(2 pi i m / (b - 1)); G_MD[u,v] = c_u conj(c_v) G_Gabor[u,v]"
                                : "none";
  report.elements = labels.size();
  report.points_excluded = excluded;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    if (u == 0) report.points_compared = worst[u].compared;
    if (worst[u].deviation > report.max_pointwise_deviation || u == 0) {
      report.max_pointwise_deviation = worst[u].deviation;
      report.worst_pointwise_index = labels[u];
      report.worst_pointwise_x = worst[u].x;
    }
  }

  const Eigen::MatrixXcd g_md = gram_from_samples(md_side, w, compute);
  const Eigen::MatrixXcd g_gabor = gram_from_samples(gabor_side, w, compute);
  for (Eigen::Index u = 0; u < count; ++u) {
    for (Eigen::Index v = 0; v < count; ++v) {
      const complex corrected = phases[static_cast<std::size_t>(u)] *
                                std::conj(phases[static_cast<std::size_t>(v)]) * g_gabor(u, v);
      const double dev = std::abs(g_md(u, v) - corrected);
      if (dev > report.max_gram_deviation || (u == 0 && v == 0)) {
        report.max_gram_deviation = dev;
        report.worst_gram_row = labels[static_cast<std::size_t>(u)];
        report.worst_gram_col = labels[static_cast<std::size_t>(v)];
      }
    }
  }

  if (grid_halfline) {
    const GramReport direct = gram_matrix(SystemSpec{spec}, *grid_halfline, compute);
    report.halfline_gram_deviation = (direct.matrix - g_md).cwiseAbs().maxCoeff();
  }
  return report;
}

}  // namespace mdg
