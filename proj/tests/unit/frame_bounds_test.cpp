// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <gtest/gtest.h>
#include <Eigen/Eigenvalues>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"

namespace mdg {
namespace {

const FuncExpr kChi01 = FuncExpr::char_interval(0.0, 1.0);
const FuncExpr kChi12 = FuncExpr::char_interval(1.0, 2.0, Domain::PositiveHalfLine);

MDSystemSpec md_chi(std::int64_t p, std::int64_t q) {
  return {{kChi12}, make_params(2.0, p, q), {-4, 4}, {-4, 4}};
}

TEST(MatchedGrid, SatisfiesStepRule) {
  const GaborSystemSpec spec{{kChi01}, 1.0, 0.5, {-2, 2}, {-3, 3}};
  const Grid grid = matched_grid(spec, -3.0, 4.0);
  EXPECT_NEAR(grid.step() * 0.5 * 7.0, 1.0, 1e-15);
  EXPECT_LE(grid.lo(), -3.0);
  EXPECT_GE(grid.hi(), 4.0 - grid.step());
}

TEST(FrameBounds, OrthonormalGabor) {
  const SystemSpec spec = GaborSystemSpec{{kChi01}, 1.0, 1.0, {-4, 4}, {-4, 4}};
  const auto r = frame_bounds_estimate(spec, matched_grid(spec, -4.0, 5.0), 0.5);
  EXPECT_NEAR(r.lower, 1.0, 1e-3);
  EXPECT_NEAR(r.upper, 1.0, 1e-3);
  EXPECT_NEAR(r.upper_full, 1.0, 1e-3);
  EXPECT_EQ(r.elements, 81u);
  EXPECT_GT(r.test_points, 0u);
  EXPECT_EQ(r.method, FrameMethod::FrameOperatorEigs);
  EXPECT_NE(r.truncation.find("k=[-4,4]"), std::string::npos);
}

TEST(FrameBounds, OrthonormalMd) {
  const SystemSpec spec = md_chi(1, 1);
  const auto r = frame_bounds_estimate(spec, matched_grid(spec, -4.0, 5.0), 0.5);
  EXPECT_NEAR(r.lower, 1.0, 1e-3);
  EXPECT_NEAR(r.upper, 1.0, 1e-3);
}

TEST(FrameBounds, UndersampledGaborHasNoLowerBound) {
  const SystemSpec spec = GaborSystemSpec{{kChi01}, 2.0, 1.0, {-4, 4}, {-4, 4}};
  const auto r = frame_bounds_estimate(spec, matched_grid(spec, -8.0, 9.0), 0.5);
  EXPECT_LE(r.lower, 1e-6);
  EXPECT_NEAR(r.upper, 1.0, 1e-3);
}

TEST(FrameBounds, DensityDirection) {
  for (auto [p, q, expect_frame] : {std::tuple{1, 2, true}, {1, 1, true}, {2, 1, false}}) {
    const SystemSpec spec = md_chi(p, q);
    const auto r = frame_bounds_estimate(spec, matched_grid(spec, -4.0, 5.0), 0.5);
    if (expect_frame) {
      EXPECT_GE(r.lower, 0.9) << p << '/' << q;
    } else {
      EXPECT_LE(r.lower, 1e-6) << p << '/' << q;
    }
    EXPECT_LE(r.lower, r.upper);
    EXPECT_LE(r.upper, r.upper_full + 1e-12);
  }
}

TEST(FrameBounds, UpperBoundMatchesGramOnOrthonormalCases) {
  for (const SystemSpec& spec : {SystemSpec{GaborSystemSpec{{kChi01}, 1.0, 1.0, {-4, 4}, {-4, 4}}},
                                 SystemSpec{md_chi(1, 1)}}) {
    const Grid grid = matched_grid(spec, -4.0, 5.0);
    const auto r = frame_bounds_estimate(spec, grid, 0.5);
    const auto gram = gram_matrix(spec, Grid::with_step(-4.0 + 1.0 / 1024, 1.0 / 512, 9 * 512));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram.matrix, Eigen::EigenvaluesOnly);
    const double lmax = solver.eigenvalues().maxCoeff();
    EXPECT_NEAR(r.upper, lmax, 0.05 * lmax);
  }
}

TEST(FrameBounds, GramMethod) {
  const SystemSpec spec = GaborSystemSpec{{kChi01}, 1.0, 1.0, {-2, 2}, {-2, 2}};
  const auto r = frame_bounds_estimate(spec, Grid::with_step(-3.0 + 1.0 / 512, 1.0 / 256, 7 * 256),
                                       0.5, FrameMethod::GramEigs);
  EXPECT_NEAR(r.lower, 1.0, 1e-6);
  EXPECT_NEAR(r.upper, 1.0, 1e-6);
  EXPECT_EQ(r.method, FrameMethod::GramEigs);
}

TEST(FrameBounds, RejectsUnresolvedGrid) {
  const SystemSpec spec = GaborSystemSpec{{kChi01}, 1.0, 1.0, {-4, 4}, {-4, 4}};
  try {
    frame_bounds_estimate(spec, Grid(-4.0, 5.0, 1001), 0.5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResolutionError);
  }
  EXPECT_THROW(frame_bounds_estimate(spec, matched_grid(spec, -4.0, 5.0), 0.0), Error);
  EXPECT_THROW(frame_bounds_estimate(spec, matched_grid(spec, -4.0, 5.0), 1.0), Error);
}

TEST(FrameBounds, IndependentOfThreadCount) {
  const SystemSpec spec = md_chi(1, 2);
  const Grid grid = matched_grid(spec, -4.0, 5.0);
  const auto a = frame_bounds_estimate(spec, grid, 0.5, FrameMethod::FrameOperatorEigs, {.threads = 1});
  const auto b = frame_bounds_estimate(spec, grid, 0.5, FrameMethod::FrameOperatorEigs, {.threads = 4});
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_EQ(a.upper_full, b.upper_full);
}

}  // namespace
}  // namespace mdg
