// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mdgabor/systems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "mdgabor/error.hpp"

namespace mdg {

namespace {

void require_range(const IndexRange& range, const char* name) {
  if (range.hi < range.lo) {
    throw Error(ErrorCode::OutOfRange, std::string(name) + " is empty");
  }
}

void require_window(std::size_t window, std::size_t count) {
  if (window >= count) {
    throw Error(ErrorCode::IndexOutOfRange, "window " + std::to_string(window) + " out of " +
                                                std::to_string(count) + " generators");
  }
}

}  // namespace

void MDSystemSpec::validate() const {
  if (generators.empty()) throw Error(ErrorCode::OutOfRange, "MD system has no generators");
  for (const auto& h : generators) {
    if (h.domain() != Domain::PositiveHalfLine) {
      throw Error(ErrorCode::DomainMismatch, "MD generators must live on the half-line");
    }
  }
  require_range(j_range, "j_range");
  require_range(m_range, "m_range");
}

void GaborSystemSpec::validate() const {
  if (generators.empty()) throw Error(ErrorCode::OutOfRange, "Gabor system has no generators");
  for (const auto& g : generators) {
    if (g.domain() != Domain::RealLine) {
      throw Error(ErrorCode::DomainMismatch, "Gabor windows must live on the real line");
    }
  }
  if (!(std::isfinite(alpha) && alpha > 0.0) || !(std::isfinite(beta) && beta > 0.0)) {
    throw Error(ErrorCode::OutOfRange, "alpha and beta must be positive and finite");
  }
  require_range(k_range, "k_range");
  require_range(m_range, "m_range");
}

std::vector<MDIndex> enumerate(const MDSystemSpec& spec) {
  std::vector<MDIndex> out;
  out.reserve(spec.generators.size() * spec.j_range.size() * spec.m_range.size());
  for (std::size_t l = 0; l < spec.generators.size(); ++l) {
    for (auto j = spec.j_range.lo; j <= spec.j_range.hi; ++j) {
      for (auto m = spec.m_range.lo; m <= spec.m_range.hi; ++m) out.push_back({l, j, m});
    }
  }
  return out;
}

std::vector<GaborIndex> enumerate(const GaborSystemSpec& spec) {
  std::vector<GaborIndex> out;
  out.reserve(spec.generators.size() * spec.k_range.size() * spec.m_range.size());
  for (std::size_t l = 0; l < spec.generators.size(); ++l) {
    for (auto k = spec.k_range.lo; k <= spec.k_range.hi; ++k) {
      for (auto m = spec.m_range.lo; m <= spec.m_range.hi; ++m) out.push_back({l, k, m});
    }
  }
  return out;
}

FuncExpr md_element(const MDSystemSpec& spec, std::int64_t j, std::int64_t m, std::size_t window) {
  require_window(window, spec.generators.size());
  const auto& params = spec.params;
  return spec.generators[window].dilated(params.a_pow(j)).md_modulated(m, params.b());
}

FuncExpr gabor_element(const GaborSystemSpec& spec, std::int64_t k, std::int64_t m,
                       std::size_t window) {
  require_window(window, spec.generators.size());
  return spec.generators[window]
      .translated(spec.alpha * static_cast<double>(k))
      .modulated(spec.beta * static_cast<double>(m));
}

std::size_t gabor_window_index(std::size_t md_window, std::int64_t r, std::int64_t q) {
  return md_window * static_cast<std::size_t>(q) + static_cast<std::size_t>(r);
}

GaborSystemSpec md_to_gabor(const MDSystemSpec& spec) {
  spec.validate();
  const auto& params = spec.params;
  GaborSystemSpec out;
  out.alpha = static_cast<double>(params.p());
  out.beta = 1.0;
  for (const auto& h : spec.generators) {
    for (std::int64_t r = 0; r < params.q(); ++r) {
      out.generators.push_back(warp_op(h.dilated(params.a_pow(r)), params.b()));
    }
  }
  const auto s_lo = index_split(spec.j_range.lo, params.q()).s;
  const auto s_hi = index_split(spec.j_range.hi, params.q()).s;
  out.k_range = {-s_hi, -s_lo};
  out.m_range = spec.m_range;
  return out;
}

IndexPhaseMap md_index_to_gabor_index(std::int64_t j, std::int64_t m, std::size_t window,
                                      const DilationParams& params) {
  const IndexSplit split = index_split(j, params.q());
  const double t = static_cast<double>(m) / (params.b() - 1.0);
  const complex phase = std::polar(1.0, 2.0 * std::numbers::pi * (t - std::nearbyint(t)));
  return IndexPhaseMap{
      .source = {window, j, m},
      .target = {gabor_window_index(window, split.r, params.q()), -split.s, m},
      .r = split.r,
      .phase = phase,
  };
}

// ---------------------------------------------------------------------------

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::ZeroIndex, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational operator+(Rational x, Rational y) {
  return Rational::make(x.num * y.den + y.num * x.den, x.den * y.den);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  __extension__ using wide = __int128;
  return static_cast<wide>(x.num) * y.den <=> static_cast<wide>(y.num) * x.den;
}

IndexSplit rewrite_index(std::int64_t k, std::int64_t q) { return index_split(k, q); }

RationalRewrite rational_gabor_rewrite(const GaborSystemSpec& spec, std::int64_t p,
                                       std::int64_t q) {
  spec.validate();
  if (p < 1 || q < 1) throw Error(ErrorCode::ParamMismatch, "p and q must be positive");
  if (std::gcd(p, q) != 1) throw Error(ErrorCode::ParamMismatch, "p and q must be coprime");
  const double target = static_cast<double>(p) / static_cast<double>(q);
  const double density = spec.alpha * spec.beta;
  if (std::abs(density - target) > 1e-12 * target) {
    throw Error(ErrorCode::ParamMismatch, "alpha * beta = " + std::to_string(density) +
                                              " does not equal p/q = " + std::to_string(target));
  }

  RationalRewrite out;
  out.p = p;
  out.q = q;
  out.source_windows = spec.generators.size();
  out.system.alpha = static_cast<double>(p);
  out.system.beta = 1.0;
  out.system.m_range = spec.m_range;
  out.system.k_range = {rewrite_index(spec.k_range.lo, q).s, rewrite_index(spec.k_range.hi, q).s};
  for (const auto& g : spec.generators) {
    const FuncExpr base = g.dilated(1.0 / spec.beta);
    for (std::int64_t r = 0; r < q; ++r) {
      const Rational offset = Rational::make(p * r, q);
      out.window_offsets.push_back(offset);
      out.system.generators.push_back(base.translated(offset.value()));
    }
  }
  return out;
}

RationalRewrite rational_gabor_rewrite(const FuncExpr& g, double alpha, double beta,
                                       std::int64_t p, std::int64_t q, IndexRange k_range,
                                       IndexRange m_range) {
  GaborSystemSpec spec{{g}, alpha, beta, k_range, m_range};
  return rational_gabor_rewrite(spec, p, q);
}

std::vector<Rational> realized_offsets(const RationalRewrite& rewrite) {
  std::vector<Rational> out;
  const auto& range = rewrite.system.k_range;
  for (auto k = range.lo; k <= range.hi; ++k) {
    for (const auto& offset : rewrite.window_offsets) {
      out.push_back(Rational::make(rewrite.p * k, 1) + offset);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mdg
