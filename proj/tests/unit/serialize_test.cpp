// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <gtest/gtest.h>

#include "mdgabor/error.hpp"
#include "mdgabor/serialize.hpp"

namespace mdg {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected mdg::Error";
  return ErrorCode::Io;
}

const json kMd = json::parse(R"({
  "kind": "md", "b": 2, "p": 1, "q": 2,
  "generators": [{"type": "char_interval", "lo": 1, "hi": 2}],
  "j_range": [-2, 2], "m_range": [-1, 1]
})");

TEST(Serialize, MdSystemRoundTrip) {
  const auto spec = std::get<MDSystemSpec>(system_from_json(kMd));
  EXPECT_EQ(spec.params.q(), 2);
  EXPECT_EQ(spec.generators[0].domain(), Domain::PositiveHalfLine);
  EXPECT_EQ(spec.j_range, (IndexRange{-2, 2}));
  const json back = system_to_json(spec);
  EXPECT_EQ(back.at("alpha"), 1.0);
  EXPECT_EQ(back.at("beta"), 1.0);
  const auto again = std::get<MDSystemSpec>(system_from_json(back));
  EXPECT_EQ(expr_to_json(again.generators[0]), expr_to_json(spec.generators[0]));
}

TEST(Serialize, RejectsUnknownFields) {
  json bad = kMd;
  bad["colour"] = "blue";
  EXPECT_EQ(code_of([&] { system_from_json(bad); }), ErrorCode::InvalidConfig);

  json bad_gen = kMd;
  bad_gen["generators"][0]["centre"] = 1.0;
  EXPECT_EQ(code_of([&] { system_from_json(bad_gen); }), ErrorCode::InvalidConfig);

  EXPECT_EQ(code_of([] { grid_from_json(json::parse(R"({"lo":0,"hi":1,"n":10,"step":0.1})")); }),
            ErrorCode::InvalidConfig);
}

TEST(Serialize, RejectsInconsistentMdLattice) {
  json bad = kMd;
  bad["alpha"] = 2.0;
  EXPECT_EQ(code_of([&] { system_from_json(bad); }), ErrorCode::InvalidConfig);
}

TEST(Serialize, ComposedDescriptors) {
  const json d = json::parse(R"({"type": "warp", "b": 2,
    "of": {"type": "md_modulate", "m": 1, "b": 2,
           "of": {"type": "gaussian", "center": 1.5, "width": 0.5}}})");
  const auto e = expr_from_json(d, Domain::RealLine);
  EXPECT_EQ(e.domain(), Domain::RealLine);
  const auto direct = warp_op(FuncExpr::gaussian(1.5, 0.5, Domain::PositiveHalfLine).md_modulated(1, 2.0), 2.0);
  for (double x : {-1.0, 0.2, 0.7}) EXPECT_EQ(e(x), direct(x));
  EXPECT_EQ(expr_to_json(e), expr_to_json(direct));
}

TEST(Serialize, GridAndRange) {
  const auto g = grid_from_json(json::parse(R"({"lo": 0.5, "hi": 4, "n": 8, "domain": "half_line"})"));
  EXPECT_EQ(g.domain(), Domain::PositiveHalfLine);
  EXPECT_EQ(grid_to_json(g).at("domain"), "half_line");
  EXPECT_EQ(code_of([] { range_from_json(json::parse("[3, 1]"), "r"); }), ErrorCode::InvalidConfig);
  EXPECT_EQ(code_of([] { range_from_json(json::parse("[1.5, 2]"), "r"); }), ErrorCode::InvalidConfig);
}

TEST(Serialize, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

}  // namespace
}  // namespace mdg
