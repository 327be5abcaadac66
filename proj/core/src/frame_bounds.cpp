// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"
#include "sampling.hpp"

namespace mdg {

namespace {

constexpr double kStepRuleTolerance = 1e-9;

struct ModulationLattice {
  double beta;
  std::size_t channels;
};

ModulationLattice modulation_lattice(const SystemSpec& spec) {
  if (const auto* md = std::get_if<MDSystemSpec>(&spec)) return {1.0, md->m_range.size()};
  const auto& g = std::get<GaborSystemSpec>(spec);
  return {g.beta, g.m_range.size()};
}

std::string describe_truncation(const SystemSpec& spec) {
  std::ostringstream out;
  if (const auto* md = std::get_if<MDSystemSpec>(&spec)) {
    out << "md b=" << md->params.b() << " p=" << md->params.p() << " q=" << md->params.q()
        << " windows=" << md->generators.size() << " j=[" << md->j_range.lo << ','
        << md->j_range.hi << "] m=[" << md->m_range.lo << ',' << md->m_range.hi << ']';
  } else {
    const auto& g = std::get<GaborSystemSpec>(spec);
    out << "gabor alpha=" << g.alpha << " beta=" << g.beta << " windows=" << g.generators.size()
        << " k=[" << g.k_range.lo << ',' << g.k_range.hi << "] m=[" << g.m_range.lo << ','
        << g.m_range.hi << ']';
  }
  return out.str();
}

/// Extreme eigenvalues of A A^H, computed from whichever of A A^H or A^H A
/// is smaller. If A has fewer columns than rows, A A^H is singular.
std::pair<double, double> extreme_eigs_outer(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0) return {0.0, 0.0};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  if (a.rows() <= a.cols()) {
    solver.compute(a * a.adjoint(), Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {std::max(0.0, ev.minCoeff()), ev.maxCoeff()};
  }
  solver.compute(a.adjoint() * a, Eigen::EigenvaluesOnly);
  return {0.0, solver.eigenvalues().maxCoeff()};
}

}  // namespace

const char* to_string(FrameMethod m) noexcept {
  return m == FrameMethod::FrameOperatorEigs ? "frame_operator_eigs" : "gram_eigs";
}

Grid matched_grid(const SystemSpec& spec, double lo, double hi) {
  element_labels(spec);  // validates
  const auto lattice = modulation_lattice(spec);
  const double step = 1.0 / (lattice.beta * static_cast<double>(lattice.channels));
  const double period = 1.0 / lattice.beta;
  const double start = std::floor(lo / period) * period;
  const double stop = std::ceil(hi / period) * period;
  const auto periods = static_cast<std::size_t>(std::llround((stop - start) / period));
  const std::size_t n = std::max<std::size_t>(periods * lattice.channels, 2);
  return Grid::with_step(start + 0.5 * step, step, n);
}

FrameBoundsReport frame_bounds_estimate(const SystemSpec& spec, const Grid& grid, double test_margin,
                                        FrameMethod method, const ComputeOptions& options) {
  if (!(test_margin > 0.0 && test_margin < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "test_margin must lie in (0, 1)");
  }
  const auto labels = element_labels(spec);
  FrameBoundsReport report{
      .lower = 0.0,
      .upper = 0.0,
      .upper_full = 0.0,
      .method = method,
      .grid = grid,
      .test_margin = test_margin,
      .test_points = 0,
      .elements = labels.size(),
      .truncation = describe_truncation(spec),
  };

  if (method == FrameMethod::GramEigs) {
    const GramReport gram = gram_matrix(spec, grid, options);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram.matrix, Eigen::EigenvaluesOnly);
    report.lower = std::max(0.0, solver.eigenvalues().minCoeff());
    report.upper = solver.eigenvalues().maxCoeff();
    report.upper_full = report.upper;
    return report;
  }

  if (grid.domain() != Domain::RealLine) {
    throw Error(ErrorCode::DomainMismatch,
                "frame operator bounds are computed on a real-line (warped) grid");
  }
  const auto lattice = modulation_lattice(spec);
  const double product = grid.step() * lattice.beta * static_cast<double>(lattice.channels);
  if (std::abs(product - 1.0) > kStepRuleTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "grid step " << grid.step() << " does not resolve the " << lattice.channels
        << " modulation channels; the discretised frame operator needs step = 1/(beta * "
        << lattice.channels << ") = " << 1.0 / (lattice.beta * static_cast<double>(lattice.channels));
    throw Error(ErrorCode::ResolutionError, msg.str());
  }

  const Eigen::MatrixXcd samples = sample_elements(spec, grid, options);
  const auto w = grid.weights();
  const auto n = static_cast<Eigen::Index>(grid.size());

  // Row i of `analysis` is sqrt(w_i) times the samples of every element at
  // x_i; the frame operator on the discretised space is analysis * analysis^H.
  Eigen::MatrixXcd analysis = samples;
  for (Eigen::Index i = 0; i < n; ++i) analysis.row(i) *= std::sqrt(w[static_cast<std::size_t>(i)]);

  const double width = grid.hi() - grid.lo();
  const double c_lo = grid.lo() + 0.5 * test_margin * width;
  const double c_hi = grid.hi() - 0.5 * test_margin * width;
  std::vector<Eigen::Index> central;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = grid.point(static_cast<std::size_t>(i));
    if (x >= c_lo && x <= c_hi) central.push_back(i);
  }
  if (central.empty()) throw Error(ErrorCode::ResolutionError, "no grid points in the test region");

  Eigen::MatrixXcd restricted(static_cast<Eigen::Index>(central.size()), analysis.cols());
  for (std::size_t c = 0; c < central.size(); ++c) {
    restricted.row(static_cast<Eigen::Index>(c)) = analysis.row(central[c]);
  }

  const auto [lo_c, hi_c] = extreme_eigs_outer(restricted);
  const auto full = extreme_eigs_outer(analysis);
  report.lower = lo_c;
  report.upper = hi_c;
  report.upper_full = full.second;
  report.test_points = central.size();
  return report;
}

}  // namespace mdg
