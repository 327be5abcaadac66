// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"

namespace mdg {
namespace {

const double kGaussianProduct = 1.0 / (16.0 * std::numbers::pi * std::numbers::pi);

TEST(Uncertainty, GaussianMoments) {
  const auto r = uncertainty_product(FuncExpr::gaussian(0.0, 1.0), 0.0, 0.0, Grid(-8.0, 8.0, 1 << 14));
  EXPECT_NEAR(r.time_moment, 1.0 / (4.0 * std::numbers::pi), 1e-8);
  EXPECT_NEAR(r.frequency_moment, 1.0 / (4.0 * std::numbers::pi), 1e-8);
  EXPECT_NEAR(r.product, kGaussianProduct, 1e-4);
}

TEST(Uncertainty, GaussianIsRefinementStable) {
  const auto g = FuncExpr::gaussian(0.0, 1.0);
  double prev = uncertainty_product(g, 0.0, 0.0, Grid(-8.0, 8.0, 1 << 10)).product;
  for (int e : {12, 14}) {
    const double cur = uncertainty_product(g, 0.0, 0.0, Grid(-8.0, 8.0, std::size_t{1} << e)).product;
    EXPECT_NEAR(cur, prev, 1e-4);
    prev = cur;
  }
}

TEST(Uncertainty, WideGaussianKeepsTheProduct) {
  const auto r = uncertainty_product(FuncExpr::gaussian(0.0, 2.0).modulated(1.0), 0.0, 1.0,
                                     Grid(-16.0, 16.0, 1 << 14));
  EXPECT_NEAR(r.product, kGaussianProduct, 1e-6);
}

TEST(Uncertainty, TranslationInvariance) {
  const Grid grid(-8.0, 8.0, 1 << 12);
  const auto gauss = FuncExpr::gaussian(0.0, 0.8);
  const double g0 = uncertainty_product(gauss, 0.0, 0.0, grid).product;
  for (double c : {-1.37, 0.75, 2.1}) {
    EXPECT_NEAR(uncertainty_product(gauss.translated(c), c, 0.0, grid).product, g0, 1e-8) << c;
  }
  // Kinks stay on the same sample lattice when the shift is a whole number of steps.
  const auto hat = FuncExpr::hat(0.0, 1.0);
  const double h0 = uncertainty_product(hat, 0.0, 0.0, grid).product;
  for (int steps : {-300, 77, 512}) {
    const double c = steps * grid.step();
    EXPECT_NEAR(uncertainty_product(hat.translated(c), c, 0.0, grid).product, h0, 1e-8) << c;
  }
}

TEST(Uncertainty, IndicatorFrequencyMomentGrows) {
  const auto g = FuncExpr::char_interval(0.0, 1.0);
  double prev = 0.0;
  for (int e : {10, 12, 14}) {
    const auto r = uncertainty_product(g, 0.5, 0.0, Grid(-4.0, 4.0, std::size_t{1} << e));
    if (prev > 0.0) EXPECT_GE(r.frequency_moment, 1.5 * prev);
    prev = r.frequency_moment;
  }
}

TEST(Uncertainty, WarpedIndicatorDiverges) {
  const auto g = warp_op(FuncExpr::char_interval(1.0, 2.0, Domain::PositiveHalfLine), 2.0);
  double prev = 0.0;
  for (int e : {12, 14, 16}) {
    const double cur = uncertainty_product(g, 0.5, 0.0, Grid(-8.0, 8.0, std::size_t{1} << e)).product;
    if (prev > 0.0) {
      EXPECT_GT(cur, prev);
      EXPECT_GE(cur, 1.5 * prev);
    }
    prev = cur;
  }
}

TEST(Uncertainty, Preconditions) {
  try {
    uncertainty_product(FuncExpr::gaussian(0.0, 1.0), 0.0, 0.0, Grid(-8.0, 8.0, 1000));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResolutionError);
  }
  EXPECT_THROW(uncertainty_product(FuncExpr::gaussian(1.0, 1.0, Domain::PositiveHalfLine), 0.0, 0.0,
                                   Grid(0.1, 8.0, 1024, Domain::PositiveHalfLine)),
               Error);
}

}  // namespace
}  // namespace mdg
