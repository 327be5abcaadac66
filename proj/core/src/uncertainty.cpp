// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include <fftw3.h>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"

namespace mdg {

namespace {

// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

/// Forward DFT X_k = sum_i x_i exp(-2 pi i i k / n). FFTW_ESTIMATE keeps the
/// chosen algorithm, and therefore the rounding, identical across runs.
std::vector<complex> forward_dft(const std::vector<complex>& input) {
  const int n = static_cast<int>(input.size());
  std::unique_ptr<fftw_complex[], FftwFree> buf(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * input.size())));
  if (!buf) throw Error(ErrorCode::ResolutionError, "FFT buffer allocation failed");
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, buf.get(), buf.get(), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  for (std::size_t i = 0; i < input.size(); ++i) {
    buf[i][0] = input[i].real();
    buf[i][1] = input[i].imag();
  }
  fftw_execute(plan);
  std::vector<complex> out(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) out[i] = {buf[i][0], buf[i][1]};
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

UncertaintyProduct uncertainty_product(const FuncExpr& g, double u, double eta, const Grid& grid) {
  if (g.domain() != Domain::RealLine || grid.domain() != Domain::RealLine) {
    throw Error(ErrorCode::DomainMismatch, "uncertainty product is defined for real-line windows");
  }
  const std::size_t n = grid.size();
  if ((n & (n - 1)) != 0) {
    throw Error(ErrorCode::ResolutionError,
                "grid size " + std::to_string(n) + " is not a power of two");
  }
  const auto xs = grid.points();
  const auto w = grid.weights();
  const double h = grid.step();
  const std::vector<complex> samples = g.sample(xs);

  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) terms[i] = w[i] * (xs[i] - u) * (xs[i] - u) * std::norm(samples[i]);
  const double time_moment = pairwise_sum(terms);

  // g^(w_k) = h exp(-2 pi i lo w_k) X_k on w_k = k / (n h), k in [-n/2, n/2).
  const std::vector<complex> spectrum = forward_dft(samples);
  const double nh = static_cast<double>(n) * h;
  for (std::size_t k = 0; k < n; ++k) {
    const double index = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
    const double omega = index / nh;
    terms[k] = (omega - eta) * (omega - eta) * std::norm(spectrum[k]);
  }
  const double frequency_moment = pairwise_sum(terms) * h * h / nh;

  return {time_moment, frequency_moment, time_moment * frequency_moment};
}

}  // namespace mdg
