// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include "mdgabor/analysis.hpp"

namespace mdg::detail {

/// The function actually sampled for an element: MD elements are warped
/// when the grid is on the real line.
FuncExpr sampled_form(const SystemSpec& spec, const ElementLabel& label, Domain grid_domain);

/// Sampled representative of a probe function `f` given as a member of the
/// system's native space.
FuncExpr probe_form(const FuncExpr& f, const SystemSpec& spec, Domain grid_domain);

double spec_b(const SystemSpec& spec);

}  // namespace mdg::detail
