// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "mdgabor/funcmodel.hpp"
#include "mdgabor/params.hpp"

namespace mdg {

/// Inclusive integer interval [lo, hi].
struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::size_t size() const noexcept { return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0; }
  bool contains(std::int64_t i) const noexcept { return i >= lo && i <= hi; }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Truncated MD system {a^(j/2) gamma_m h_l(a^j .)}, j in j_range, m in m_range.
struct MDSystemSpec {
  std::vector<FuncExpr> generators;
  DilationParams params;
  IndexRange j_range;
  IndexRange m_range;

  void validate() const;
};

/// Truncated multi-window Gabor system {M_{beta m} T_{alpha k} g_l}.
struct GaborSystemSpec {
  std::vector<FuncExpr> generators;
  double alpha = 1.0;
  double beta = 1.0;
  IndexRange k_range;
  IndexRange m_range;

  void validate() const;
};

struct MDIndex {
  std::size_t window;
  std::int64_t j;
  std::int64_t m;

  friend bool operator==(const MDIndex&, const MDIndex&) = default;
};

struct GaborIndex {
  std::size_t window;
  std::int64_t k;
  std::int64_t m;

  friend bool operator==(const GaborIndex&, const GaborIndex&) = default;
};

/// Lexicographic (window, j, m) and (window, k, m) enumerations; this is the
/// row/column order of every Gram matrix.
std::vector<MDIndex> enumerate(const MDSystemSpec& spec);
std::vector<GaborIndex> enumerate(const GaborSystemSpec& spec);

FuncExpr md_element(const MDSystemSpec& spec, std::int64_t j, std::int64_t m, std::size_t window);
FuncExpr gabor_element(const GaborSystemSpec& spec, std::int64_t k, std::int64_t m,
                       std::size_t window);

/// MD generator l with dilation remainder r becomes Gabor window l q + r.
std::size_t gabor_window_index(std::size_t md_window, std::int64_t r, std::int64_t q);

/// Equivalent Gabor system: alpha = p, beta = 1 and windows
/// g_{l,r} = D_phi D_{a^r} h_l, r = 0..q-1.
GaborSystemSpec md_to_gabor(const MDSystemSpec& spec);

struct IndexPhaseMap {
  MDIndex source;
  GaborIndex target;
  std::int64_t r;
  complex phase;
};

/// D_phi M_{gamma_m} D_{a^j} h_l = phase * M_m T_{p k} g_{l,r} with j = s q + r,
/// k = -s and phase = exp(2 pi i m / (b - 1)).
IndexPhaseMap md_index_to_gabor_index(std::int64_t j, std::int64_t m, std::size_t window,
                                      const DilationParams& params);

/// Exact rational number with positive denominator, kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(Rational x, Rational y);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);
};

/// G(alpha, beta) with alpha beta = p / q rewritten, via D_{1/beta}, as the
/// integer-step system G(p, 1) with q windows w_r = T_{p r / q} D_{1/beta} g.
struct RationalRewrite {
  GaborSystemSpec system;
  std::int64_t p;
  std::int64_t q;
  /// Translation offset p r / q of window r (per original window, repeated q times).
  std::vector<Rational> window_offsets;
  /// Original window count; rewritten window index is l q + r.
  std::size_t source_windows;
};

/// Original index k = q k'' + r.
IndexSplit rewrite_index(std::int64_t k, std::int64_t q);

RationalRewrite rational_gabor_rewrite(const GaborSystemSpec& spec, std::int64_t p,
                                       std::int64_t q);

RationalRewrite rational_gabor_rewrite(const FuncExpr& g, double alpha, double beta,
                                       std::int64_t p, std::int64_t q, IndexRange k_range,
                                       IndexRange m_range);

/// All translation offsets p k'' + p r / q realised by the rewritten system,
/// sorted and de-duplicated.
std::vector<Rational> realized_offsets(const RationalRewrite& rewrite);

}  // namespace mdg
