// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mdgabor/params.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mdgabor/error.hpp"

namespace mdg {

DilationParams::DilationParams(double b, std::int64_t p, std::int64_t q) {
  if (!std::isfinite(b)) throw Error(ErrorCode::NonFinite, "b must be finite");
  if (!(b > 1.0)) throw Error(ErrorCode::OutOfRange, "b must exceed 1, got " + std::to_string(b));
  if (p == 0 || q == 0) throw Error(ErrorCode::ZeroIndex, "p and q must be nonzero");
  if (p < 0 || q < 0) throw Error(ErrorCode::OutOfRange, "p and q must be positive");

  const std::int64_t g = std::gcd(p, q);
  b_ = b;
  p_ = p / g;
  q_ = q / g;
  reduced_ = g != 1;
  a_ = std::pow(b_, static_cast<double>(p_) / static_cast<double>(q_));
}

double DilationParams::a_pow(std::int64_t j) const {
  const IndexSplit split = index_split(j, q_);
  // b^(s p) carries the exact integer part of the exponent.
  double value = std::pow(b_, static_cast<double>(split.s * p_));
  if (split.r != 0) value *= std::pow(b_, static_cast<double>(split.r * p_) / static_cast<double>(q_));
  return value;
}

DilationParams make_params(double b, std::int64_t p, std::int64_t q) { return DilationParams(b, p, q); }

Sampling classify(const DilationParams& params) noexcept {
  if (params.p() < params.q()) return Sampling::Oversampled;
  if (params.p() == params.q()) return Sampling::Critical;
  return Sampling::Undersampled;
}

const char* to_string(Sampling s) noexcept {
  switch (s) {
    case Sampling::Oversampled: return "oversampled";
    case Sampling::Critical: return "critical";
    case Sampling::Undersampled: return "undersampled";
  }
  return "unknown";
}

IndexSplit index_split(std::int64_t j, std::int64_t q) {
  if (q < 1) throw Error(ErrorCode::OutOfRange, "index_split requires q >= 1");
  std::int64_t s = j / q;
  std::int64_t r = j - s * q;
  if (r < 0) {
    r += q;
    --s;
  }
  return {s, r};
}

}  // namespace mdg
