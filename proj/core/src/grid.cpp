// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <string>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"

namespace mdg {

namespace {

template <class T>
T pairwise(std::span<const T> v) {
  if (v.size() <= 8) {
    T acc{};
    for (const auto& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace

Grid::Grid(double lo, double hi, std::size_t n, Domain domain)
    : lo_(lo), hi_(hi), n_(n), step_(0.0), domain_(domain) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorCode::NonFinite, "grid bounds must be finite");
  if (n < 2) throw Error(ErrorCode::DegenerateGrid, "grid needs at least two points");
  if (!(hi > lo)) throw Error(ErrorCode::DegenerateGrid, "grid requires hi > lo");
  if (domain == Domain::PositiveHalfLine && !(lo > 0.0)) {
    throw Error(ErrorCode::DegenerateGrid, "half-line grids require lo > 0");
  }
  step_ = (hi - lo) / static_cast<double>(n - 1);
}

Grid Grid::with_step(double lo, double step, std::size_t n, Domain domain) {
  if (!(step > 0.0)) throw Error(ErrorCode::DegenerateGrid, "grid step must be positive");
  if (n < 2) throw Error(ErrorCode::DegenerateGrid, "grid needs at least two points");
  Grid grid(lo, lo + static_cast<double>(n - 1) * step, n, domain);
  grid.step_ = step;
  return grid;
}

std::vector<double> Grid::points() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = point(i);
  return out;
}

std::vector<double> Grid::weights() const {
  std::vector<double> w(n_, step_);
  w.front() = 0.5 * step_;
  w.back() = 0.5 * step_;
  return w;
}

double pairwise_sum(std::span<const double> values) { return pairwise(values); }

complex pairwise_sum(std::span<const complex> values) { return pairwise(values); }

complex inner_product(std::span<const complex> f, std::span<const complex> g,
                      std::span<const double> weights) {
  if (f.size() != g.size() || f.size() != weights.size()) {
    throw Error(ErrorCode::DegenerateGrid, "sample vectors and weights differ in length");
  }
  std::vector<complex> terms(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) terms[i] = weights[i] * f[i] * std::conj(g[i]);
  return pairwise_sum(std::span<const complex>(terms));
}

complex inner_product(const FuncExpr& f, const FuncExpr& g, const Grid& grid) {
  if (f.domain() != g.domain()) {
    throw Error(ErrorCode::DomainMismatch, "inner product of functions on different domains");
  }
  if (f.domain() != grid.domain()) {
    throw Error(ErrorCode::DomainMismatch, std::string("grid is on ") + to_string(grid.domain()) +
                                               " but functions are on " + to_string(f.domain()));
  }
  const auto xs = grid.points();
  const auto w = grid.weights();
  return inner_product(f.sample(xs), g.sample(xs), w);
}

}  // namespace mdg
