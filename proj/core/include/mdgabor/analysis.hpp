// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "mdgabor/funcmodel.hpp"
#include "mdgabor/systems.hpp"

namespace mdg {

/// Uniform grid of n >= 2 points lo, lo + step, ..., lo + (n - 1) step = hi.
class Grid {
 public:
  Grid(double lo, double hi, std::size_t n, Domain domain = Domain::RealLine);

  /// Grid with a prescribed step; hi is derived.
  static Grid with_step(double lo, double step, std::size_t n, Domain domain = Domain::RealLine);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return n_; }
  double step() const noexcept { return step_; }
  Domain domain() const noexcept { return domain_; }

  double point(std::size_t i) const noexcept { return lo_ + static_cast<double>(i) * step_; }
  std::vector<double> points() const;
  /// Composite trapezoid weights.
  std::vector<double> weights() const;

 private:
  double lo_;
  double hi_;
  std::size_t n_;
  double step_;
  Domain domain_;
};

struct ComputeOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Sum in index-ascending pairwise order; the result does not depend on how
/// callers schedule work.
double pairwise_sum(std::span<const double> values);
complex pairwise_sum(std::span<const complex> values);

/// Trapezoid approximation of int f conj(g) over the grid.
complex inner_product(const FuncExpr& f, const FuncExpr& g, const Grid& grid);

/// Same, on already sampled values.
complex inner_product(std::span<const complex> f, std::span<const complex> g,
                      std::span<const double> weights);

using SystemSpec = std::variant<MDSystemSpec, GaborSystemSpec>;
using ElementLabel = std::variant<MDIndex, GaborIndex>;

std::vector<ElementLabel> element_labels(const SystemSpec& spec);

/// Samples of every element on the grid, one column per element in
/// enumeration order. MD systems sampled on a RealLine grid are sampled on
/// the warped side (D_phi applied to each element), which is exact under
/// the change of variables and avoids resolving gamma_m near 0.
Eigen::MatrixXcd sample_elements(const SystemSpec& spec, const Grid& grid,
                                 const ComputeOptions& options = {});

struct GramReport {
  Eigen::MatrixXcd matrix;
  std::vector<ElementLabel> labels;
  Grid grid;
  double max_asymmetry = 0.0;
};

/// Weighted Gram matrix G[u, v] = sum_i w_i e_u(x_i) conj(e_v(x_i)) of sampled
/// columns. Assembled Hermitian (upper triangle, conjugated below).
Eigen::MatrixXcd gram_from_samples(const Eigen::MatrixXcd& samples, std::span<const double> weights,
                                   const ComputeOptions& options = {},
                                   double* max_asymmetry = nullptr);

GramReport gram_matrix(const SystemSpec& spec, const Grid& grid, const ComputeOptions& options = {});

enum class FrameMethod { FrameOperatorEigs, GramEigs };

const char* to_string(FrameMethod m) noexcept;

struct FrameBoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  /// Largest frame operator eigenvalue on the whole discretised space.
  double upper_full = 0.0;
  FrameMethod method = FrameMethod::FrameOperatorEigs;
  Grid grid;
  double test_margin = 0.0;
  std::size_t test_points = 0;
  std::size_t elements = 0;
  /// Per-window truncation of the system that was analysed.
  std::string truncation;
};

/// Frame bound estimates of the truncated system on the discretised space.
///
/// The analysis operator is sampled on the grid (rows scaled by
/// sqrt(weight)). For the frame-operator method the grid step must equal
/// 1 / (beta * #modulations), the only step at which the truncated
/// modulation set is a complete discrete Fourier basis per translation cell;
/// finer grids make the operator rank deficient and coarser ones alias
/// modulations. lower/upper are the extreme eigenvalues of the frame
/// operator compressed to grid points inside the central (1 - test_margin)
/// fraction of [lo, hi]. MD systems are analysed on the warped side.
FrameBoundsReport frame_bounds_estimate(const SystemSpec& spec, const Grid& grid, double test_margin,
                                        FrameMethod method = FrameMethod::FrameOperatorEigs,
                                        const ComputeOptions& options = {});

/// Grid that satisfies the frame-operator step rule for `spec`. [lo, hi] is
/// widened to whole modulation periods 1/beta and samples sit at cell
/// midpoints, so no sample falls on a period boundary.
Grid matched_grid(const SystemSpec& spec, double lo, double hi);

struct EquivalenceOptions {
  bool apply_phase = true;
  /// Grid points within this distance of an integer are skipped in the
  /// pointwise comparison.
  double breakpoint_exclusion = 1e-9;
};

struct EquivalenceReport {
  double max_pointwise_deviation = 0.0;
  double max_gram_deviation = 0.0;
  std::string phase_convention;
  MDIndex worst_pointwise_index{};
  double worst_pointwise_x = 0.0;
  MDIndex worst_gram_row{};
  MDIndex worst_gram_col{};
  std::size_t elements = 0;
  std::size_t points_compared = 0;
  std::size_t points_excluded = 0;
  /// Direct half-line quadrature of G_MD against the warped-side G_MD;
  /// only populated when a half-line grid is supplied. Quadrature limited.
  std::optional<double> halfline_gram_deviation;
};

/// Evaluates both sides of D_phi M_{gamma_m} D_{a^j} h = c M_m T_{-sp} D_phi D_{a^r} h
/// for every truncated index and compares pointwise and at the Gram level,
/// G_MD[u, v] = c_u conj(c_v) G_Gabor[u, v].
EquivalenceReport equivalence_report(const MDSystemSpec& spec,
                                     const std::optional<Grid>& grid_halfline,
                                     const Grid& grid_realline,
                                     const EquivalenceOptions& options = {},
                                     const ComputeOptions& compute = {});

inline constexpr double kProjectionRidge = 1e-12;
inline constexpr double kMaxGramCondition = 1e14;

/// ||f - P f|| with P the least-squares projection onto the truncated span,
/// solved through the ridge-regularised normal equations.
double projection_residual(const FuncExpr& f, const SystemSpec& spec, const Grid& grid,
                           const ComputeOptions& options = {});

struct UncertaintyProduct {
  double time_moment = 0.0;
  double frequency_moment = 0.0;
  double product = 0.0;
};

/// int |x - u|^2 |g|^2 dx times int |w - eta|^2 |g^(w)|^2 dw, with
/// g^(w) = int g(x) exp(-2 pi i x w) dx computed by a DFT of the samples.
/// The grid size must be a power of two.
UncertaintyProduct uncertainty_product(const FuncExpr& g, double u, double eta, const Grid& grid);

}  // namespace mdg
