// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>

namespace mdg {

/// Rational dilation parameters: a^q = b^p with gcd(p, q) = 1.
///
/// Users supply (b, p, q); the dilation a = b^(p/q) is always derived so
/// that log_b(a) is rational by construction. Non-coprime input is reduced
/// and `reduced()` reports that it happened.
class DilationParams {
 public:
  DilationParams(double b, std::int64_t p, std::int64_t q);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  bool reduced() const noexcept { return reduced_; }

  /// a^j evaluated as b^(p j / q), which is exact in the exponent whenever
  /// q divides j.
  double a_pow(std::int64_t j) const;

  /// log_b(a) = p / q.
  double log_b_a() const noexcept { return static_cast<double>(p_) / static_cast<double>(q_); }

  friend bool operator==(const DilationParams&, const DilationParams&) = default;

 private:
  double b_;
  std::int64_t p_;
  std::int64_t q_;
  double a_;
  bool reduced_ = false;
};

DilationParams make_params(double b, std::int64_t p, std::int64_t q);

enum class Sampling { Oversampled, Critical, Undersampled };

/// p < q oversampled, p = q critical, p > q undersampled (for reduced params
/// only p = q = 1 is critical).
Sampling classify(const DilationParams& params) noexcept;

const char* to_string(Sampling s) noexcept;

struct IndexSplit {
  std::int64_t s;
  std::int64_t r;

  friend bool operator==(const IndexSplit&, const IndexSplit&) = default;
};

/// Floor division j = s q + r with 0 <= r < q, also for negative j.
IndexSplit index_split(std::int64_t j, std::int64_t q);

}  // namespace mdg
