// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"
#include "mdgabor/systems.hpp"
#include "quad_oracle.hpp"

namespace mdg {
namespace {

FuncExpr chi_half(double b) { return FuncExpr::char_interval(1.0, b, Domain::PositiveHalfLine); }

MDSystemSpec md_spec(std::vector<FuncExpr> h, double b, std::int64_t p, std::int64_t q,
                     IndexRange j = {-2, 2}, IndexRange m = {-2, 2}) {
  return MDSystemSpec{std::move(h), make_params(b, p, q), j, m};
}

TEST(MdElement, IdentityAtOrigin) {
  const auto h = FuncExpr::gaussian(1.5, 0.5, Domain::PositiveHalfLine);
  const auto spec = md_spec({h}, 2.0, 1, 2);
  const auto e = md_element(spec, 0, 0, 0);
  for (double x : {0.2, 1.0, 1.5, 3.3}) EXPECT_EQ(e(x), h(x));
  EXPECT_THROW(md_element(spec, 0, 0, 1), Error);
  try {
    md_element(spec, 0, 0, 3);
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(MdElement, SupportOfCharacteristicWindow) {
  for (auto [b, p, q] : {std::tuple{2.0, 1, 1}, {2.0, 1, 2}, {3.0, 2, 3}}) {
    const auto spec = md_spec({chi_half(b)}, b, p, q);
    for (std::int64_t j = -3; j <= 3; ++j) {
      const double lo = spec.params.a_pow(-j);
      const double hi = lo * b;
      const auto e = md_element(spec, j, 1, 0);
      EXPECT_NEAR(std::abs(e(lo * (1 + 1e-12))), std::sqrt(spec.params.a_pow(j)), 1e-12);
      EXPECT_NEAR(std::abs(e(hi * (1 - 1e-12))), std::sqrt(spec.params.a_pow(j)), 1e-12);
      EXPECT_EQ(e(lo * (1 - 1e-9)), complex(0.0));
      EXPECT_EQ(e(hi * (1 + 1e-9)), complex(0.0));
    }
  }
}

TEST(MdElement, NormPreserving) {
  const double b = 2.0;
  const auto h = FuncExpr::gaussian(1.5, 0.6, Domain::PositiveHalfLine);
  const auto spec = md_spec({h}, b, 1, 2);
  const double ref = oracle::inner([&](double x) { return h(x); }, [&](double x) { return h(x); },
                                   1e-9, 12.0).real();
  for (std::int64_t j = -2; j <= 2; ++j) {
    for (std::int64_t m = -2; m <= 2; ++m) {
      const auto e = md_element(spec, j, m, 0);
      const double lo = 1e-9;
      const double hi = 12.0 * spec.params.a_pow(-j);
      const double norm = oracle::inner([&](double x) { return e(x); }, [&](double x) { return e(x); },
                                        lo, hi, oracle::badic_points(b, -12, 5)).real();
      EXPECT_NEAR(norm, ref, 1e-9) << j << ' ' << m;
    }
  }
}

TEST(GaborElement, SupportAndNorm) {
  const auto g = FuncExpr::char_interval(0.0, 1.0);
  const GaborSystemSpec spec{{g}, 2.0, 1.0, {-3, 3}, {-2, 2}};
  for (std::int64_t k = -3; k <= 3; ++k) {
    const auto e = gabor_element(spec, k, 1, 0);
    EXPECT_NEAR(std::abs(e(2.0 * k + 1e-9)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(e(2.0 * k + 1 - 1e-9)), 1.0, 1e-15);
    EXPECT_EQ(e(2.0 * k - 1e-9), complex(0.0));
    EXPECT_EQ(e(2.0 * k + 1), complex(0.0));
  }
  const auto e00 = gabor_element(spec, 0, 0, 0);
  for (double x : {-0.5, 0.0, 0.5}) EXPECT_EQ(e00(x), g(x));

  const auto gauss = FuncExpr::gaussian(0.0, 1.0);
  const GaborSystemSpec gs{{gauss}, 0.5, 1.5, {-2, 2}, {-2, 2}};
  const auto e = gabor_element(gs, 2, -1, 0);
  const double norm = oracle::inner([&](double x) { return e(x); }, [&](double x) { return e(x); },
                                    -12.0, 12.0).real();
  EXPECT_NEAR(norm, 1.0, 1e-10);
  EXPECT_THROW(gabor_element(gs, 0, 0, 1), Error);
}

TEST(GaborElement, OperatorOrderIsModulateAfterTranslate) {
  const auto g = FuncExpr::gaussian(0.0, 1.0);
  const GaborSystemSpec spec{{g}, 0.75, 1.25, {-2, 2}, {-2, 2}};
  const auto e = gabor_element(spec, 1, 2, 0);
  for (double x : {-1.0, 0.3, 1.9}) {
    const complex expected = std::polar(1.0, 2.0 * std::numbers::pi * 2.5 * x) * g(x - 0.75);
    EXPECT_NEAR(std::abs(e(x) - expected), 0.0, 1e-14);
  }
}

TEST(Systems, ValidationRejectsWrongDomains) {
  const auto line = FuncExpr::gaussian(0.0, 1.0);
  EXPECT_THROW(md_spec({line}, 2.0, 1, 1).validate(), Error);
  EXPECT_THROW(md_spec({chi_half(2.0)}, 2.0, 1, 1, {1, 0}).validate(), Error);
  EXPECT_THROW((GaborSystemSpec{{chi_half(2.0)}, 1.0, 1.0, {0, 1}, {0, 1}}.validate()), Error);
  EXPECT_THROW((GaborSystemSpec{{line}, 0.0, 1.0, {0, 1}, {0, 1}}.validate()), Error);
  EXPECT_THROW((GaborSystemSpec{{}, 1.0, 1.0, {0, 1}, {0, 1}}.validate()), Error);
}

TEST(MdToGabor, CriticalCaseHasOneWindow) {
  const auto h = chi_half(2.0);
  const auto g = md_to_gabor(md_spec({h}, 2.0, 1, 1, {-3, 4}, {-1, 1}));
  EXPECT_EQ(g.alpha, 1.0);
  EXPECT_EQ(g.beta, 1.0);
  ASSERT_EQ(g.generators.size(), 1u);
  EXPECT_EQ(g.k_range, (IndexRange{-4, 3}));
  EXPECT_EQ(g.m_range, (IndexRange{-1, 1}));
  const auto warped = warp_op(h, 2.0);
  for (double x : {-0.5, 0.25, 0.75, 1.5}) EXPECT_EQ(g.generators[0](x), warped(x));
}

TEST(MdToGabor, TwoWindowsForSquareRootDilation) {
  const auto h = FuncExpr::gaussian(1.5, 0.5, Domain::PositiveHalfLine);
  const auto g = md_to_gabor(md_spec({h}, 2.0, 1, 2, {-4, 5}));
  EXPECT_EQ(g.alpha, 1.0);
  EXPECT_EQ(g.beta, 1.0);
  ASSERT_EQ(g.generators.size(), 2u);
  EXPECT_EQ(g.k_range, (IndexRange{-2, 2}));
  const auto second = warp_op(h.dilated(std::sqrt(2.0)), 2.0);
  for (double x : {-1.3, -0.2, 0.4, 0.9}) {
    EXPECT_NEAR(std::abs(g.generators[1](x) - second(x)), 0.0, 1e-15);
  }
}

TEST(MdToGabor, WindowCountIsLTimesQ) {
  const auto g = md_to_gabor(md_spec({chi_half(3.0), FuncExpr::gaussian(2.0, 1.0, Domain::PositiveHalfLine)},
                                     3.0, 2, 3));
  EXPECT_EQ(g.generators.size(), 6u);
  EXPECT_EQ(g.alpha, 2.0);
  EXPECT_EQ(gabor_window_index(1, 2, 3), 5u);
}

TEST(IndexMap, Examples) {
  const auto m0 = md_index_to_gabor_index(0, 0, 0, make_params(2.0, 1, 1));
  EXPECT_EQ(m0.target, (GaborIndex{0, 0, 0}));
  EXPECT_EQ(m0.r, 0);
  EXPECT_EQ(m0.phase, complex(1.0));

  const auto m1 = md_index_to_gabor_index(5, 0, 0, make_params(2.0, 2, 3));
  EXPECT_EQ(m1.target.k, -1);
  EXPECT_EQ(m1.r, 2);
  EXPECT_EQ(m1.target.window, 2u);
  EXPECT_EQ(m1.phase, complex(1.0));

  const auto m2 = md_index_to_gabor_index(0, 1, 0, make_params(3.0, 1, 1));
  EXPECT_NEAR(std::abs(m2.phase - complex(-1.0)), 0.0, 1e-15);
}

TEST(IndexMap, PhaseIsUnimodular) {
  for (double b : {1.5, 2.0, 3.0, 4.5}) {
    for (std::int64_t m = -20; m <= 20; ++m) {
      const auto map = md_index_to_gabor_index(3, m, 0, make_params(b, 1, 2));
      EXPECT_NEAR(std::abs(map.phase), 1.0, 1e-15);
      EXPECT_NEAR(std::arg(map.phase / std::polar(1.0, 2.0 * std::numbers::pi * m / (b - 1.0))), 0.0,
                  1e-12);
    }
  }
}

TEST(IndexMap, BijectionOnFullResidueBlocks) {
  for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 3}, {3, 2}}) {
    const auto params = make_params(2.0, p, q);
    const std::int64_t lo = -3 * q;
    const std::int64_t hi = 3 * q - 1;
    const auto spec = md_spec({chi_half(2.0), chi_half(2.0)}, 2.0, p, q, {lo, hi}, {-2, 2});
    const auto gabor = md_to_gabor(spec);
    std::set<std::tuple<std::size_t, std::int64_t, std::int64_t>> targets;
    for (const auto& idx : enumerate(spec)) {
      const auto map = md_index_to_gabor_index(idx.j, idx.m, idx.window, params);
      EXPECT_TRUE(gabor.k_range.contains(map.target.k));
      EXPECT_LT(map.target.window, gabor.generators.size());
      targets.emplace(map.target.window, map.target.k, map.target.m);
    }
    EXPECT_EQ(targets.size(), enumerate(spec).size());
    EXPECT_EQ(targets.size(), enumerate(gabor).size());
  }
}

TEST(Enumerate, LexicographicOrder) {
  const auto spec = md_spec({chi_half(2.0), chi_half(2.0)}, 2.0, 1, 1, {0, 1}, {-1, 0});
  const auto idx = enumerate(spec);
  ASSERT_EQ(idx.size(), 8u);
  EXPECT_EQ(idx[0], (MDIndex{0, 0, -1}));
  EXPECT_EQ(idx[1], (MDIndex{0, 0, 0}));
  EXPECT_EQ(idx[2], (MDIndex{0, 1, -1}));
  EXPECT_EQ(idx[4], (MDIndex{1, 0, -1}));
}

// Oracle: offsets (p/q) k for k in [-9, 9], as exact fractions.
std::set<std::pair<std::int64_t, std::int64_t>> lattice_oracle(std::int64_t p, std::int64_t q) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t k = -9; k <= 9; ++k) {
    std::int64_t num = p * k;
    std::int64_t den = q;
    const std::int64_t g = std::gcd(num, den);
    out.emplace(num / g, den / g);
  }
  return out;
}

TEST(RationalRewrite, OffsetSetsMatchLattice) {
  for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{1, 1}, {2, 3}, {3, 2}}) {
    const double beta = 0.8;
    const double alpha = static_cast<double>(p) / static_cast<double>(q) / beta;
    const auto rw = rational_gabor_rewrite(FuncExpr::gaussian(0.0, 1.0), alpha, beta, p, q,
                                           {-9, 9}, {-2, 2});
    std::set<std::pair<std::int64_t, std::int64_t>> realized;
    for (const auto& r : realized_offsets(rw)) realized.emplace(r.num, r.den);
    const auto expected = lattice_oracle(p, q);
    std::set<std::pair<std::int64_t, std::int64_t>> realized_in_window;
    for (const auto& r : realized) {
      if (Rational{r.first, r.second} >= Rational::make(-9 * p, q) &&
          Rational{r.first, r.second} <= Rational::make(9 * p, q)) {
        realized_in_window.insert(r);
      }
    }
    EXPECT_EQ(realized_in_window, expected) << p << '/' << q;
    EXPECT_EQ(rw.system.generators.size(), static_cast<std::size_t>(q));
    EXPECT_EQ(rw.system.alpha, static_cast<double>(p));
    EXPECT_EQ(rw.system.beta, 1.0);
  }
}

TEST(RationalRewrite, TwoThirdsOffsets) {
  const auto rw = rational_gabor_rewrite(FuncExpr::gaussian(0.0, 1.0), 2.0 / 3.0, 1.0, 2, 3,
                                         {-9, 9}, {0, 0});
  ASSERT_EQ(rw.window_offsets.size(), 3u);
  EXPECT_EQ(rw.window_offsets[0], Rational::make(0, 1));
  EXPECT_EQ(rw.window_offsets[1], Rational::make(2, 3));
  EXPECT_EQ(rw.window_offsets[2], Rational::make(4, 3));
}

TEST(RationalRewrite, CriticalIsSingleDilatedWindow) {
  const auto g = FuncExpr::gaussian(0.2, 1.0);
  const auto rw = rational_gabor_rewrite(g, 0.5, 2.0, 1, 1, {-2, 2}, {-2, 2});
  ASSERT_EQ(rw.system.generators.size(), 1u);
  EXPECT_EQ(rw.system.alpha, 1.0);
  const auto expected = g.dilated(0.5);
  for (double x : {-1.0, 0.0, 0.7}) EXPECT_EQ(rw.system.generators[0](x), expected(x));
}

TEST(RationalRewrite, RejectsMismatch) {
  const auto g = FuncExpr::gaussian(0.0, 1.0);
  for (auto fn : std::vector<std::function<void()>>{
           [&] { rational_gabor_rewrite(g, 1.0, 1.0, 2, 3, {0, 1}, {0, 1}); },
           [&] { rational_gabor_rewrite(g, 4.0 / 6.0, 1.0, 4, 6, {0, 1}, {0, 1}); },
           [&] { rational_gabor_rewrite(g, 1.0, 1.0, 0, 1, {0, 1}, {0, 1}); }}) {
    try {
      fn();
      ADD_FAILURE() << "expected ParamMismatch";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParamMismatch);
    }
  }
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational::make(4, -6), (Rational{-2, 3}));
  EXPECT_EQ(Rational::make(1, 3) + Rational::make(1, 6), (Rational{1, 2}));
  EXPECT_LT(Rational::make(-1, 2), Rational::make(1, 3));
  EXPECT_THROW(Rational::make(1, 0), Error);
}

}  // namespace
}  // namespace mdg
