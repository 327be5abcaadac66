// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <gtest/gtest.h>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"

namespace mdg {
namespace {

Grid aligned(double lo, double hi, std::size_t per_unit) {
  const double step = 1.0 / static_cast<double>(per_unit);
  return Grid::with_step(lo + 0.5 * step, step, static_cast<std::size_t>(hi - lo) * per_unit);
}

TEST(Projection, ElementOfTheSpanHasZeroResidual) {
  const GaborSystemSpec spec{{FuncExpr::gaussian(0.0, 1.0)}, 1.0, 1.0, {-2, 2}, {-2, 2}};
  const auto f = gabor_element(spec, 1, -1, 0);
  EXPECT_LE(projection_residual(f, spec, Grid(-10.0, 10.0, 4001)), 1e-6);
}

TEST(Projection, OrthogonalProbeKeepsItsNorm) {
  const GaborSystemSpec spec{{FuncExpr::char_interval(0.0, 1.0)}, 2.0, 1.0, {-3, 3}, {-4, 4}};
  const auto f = FuncExpr::char_interval(1.0, 2.0);
  EXPECT_NEAR(projection_residual(f, spec, aligned(-6.0, 8.0, 64)), 1.0, 1e-6);
}

TEST(Projection, UndersampledMdSystemMissesTheProbe) {
  const MDSystemSpec spec{{FuncExpr::char_interval(1.0, 2.0, Domain::PositiveHalfLine)},
                          make_params(2.0, 2, 1), {-3, 3}, {-4, 4}};
  const auto probe = unwarp_op(FuncExpr::char_interval(1.0, 2.0), 2.0);
  EXPECT_NEAR(projection_residual(probe, spec, aligned(-6.0, 8.0, 64)), 1.0, 1e-4);
}

TEST(Projection, CriticalMdSystemCapturesTheProbe) {
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}}) {
    const MDSystemSpec spec{{FuncExpr::char_interval(1.0, 2.0, Domain::PositiveHalfLine)},
                            make_params(2.0, p, q), {-3, 3}, {-4, 4}};
    const auto probe = unwarp_op(FuncExpr::char_interval(1.0, 2.0), 2.0);
    EXPECT_LE(projection_residual(probe, spec, aligned(-6.0, 8.0, 64)), 1e-4) << p << '/' << q;
  }
}

TEST(Projection, ResidualNeverExceedsNorm) {
  const GaborSystemSpec spec{{FuncExpr::gaussian(0.0, 0.7)}, 1.5, 0.5, {-2, 2}, {-2, 2}};
  const auto f = FuncExpr::hat(0.3, 2.0).modulated(0.9);
  const Grid grid(-10.0, 10.0, 4001);
  const double norm = std::sqrt(inner_product(f, f, grid).real());
  const double r = projection_residual(f, spec, grid);
  EXPECT_GE(r, 0.0);
  EXPECT_LE(r, norm + 1e-9);
}

TEST(Projection, SingularGramIsReported) {
  const GaborSystemSpec spec{{FuncExpr::gaussian(100.0, 0.1)}, 1.0, 1.0, {0, 1}, {0, 1}};
  try {
    projection_residual(FuncExpr::gaussian(0.0, 1.0), spec, Grid(-1.0, 1.0, 101));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularGram);
  }
}

}  // namespace
}  // namespace mdg
