// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <string>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"
#include "parallel.hpp"
#include "sampling.hpp"

namespace mdg {

namespace detail {

double spec_b(const SystemSpec& spec) {
  return std::get<MDSystemSpec>(spec).params.b();
}

FuncExpr sampled_form(const SystemSpec& spec, const ElementLabel& label, Domain grid_domain) {
  if (const auto* md = std::get_if<MDSystemSpec>(&spec)) {
    const auto& idx = std::get<MDIndex>(label);
    FuncExpr e = md_element(*md, idx.j, idx.m, idx.window);
    return grid_domain == Domain::RealLine ? warp_op(e, md->params.b()) : e;
  }
  const auto& gabor = std::get<GaborSystemSpec>(spec);
  if (grid_domain != Domain::RealLine) {
    throw Error(ErrorCode::DomainMismatch, "Gabor systems are sampled on real-line grids");
  }
  const auto& idx = std::get<GaborIndex>(label);
  return gabor_element(gabor, idx.k, idx.m, idx.window);
}

FuncExpr probe_form(const FuncExpr& f, const SystemSpec& spec, Domain grid_domain) {
  const Domain native = std::holds_alternative<MDSystemSpec>(spec) ? Domain::PositiveHalfLine
                                                                    : Domain::RealLine;
  if (f.domain() != native) {
    throw Error(ErrorCode::DomainMismatch, std::string("probe lives on ") + to_string(f.domain()) +
                                               " but the system on " + to_string(native));
  }
  if (native == Domain::PositiveHalfLine && grid_domain == Domain::RealLine) {
    return warp_op(f, spec_b(spec));
  }
  if (native != grid_domain) {
    throw Error(ErrorCode::DomainMismatch, "Gabor probes are sampled on real-line grids");
  }
  return f;
}

}  // namespace detail

std::vector<ElementLabel> element_labels(const SystemSpec& spec) {
  std::vector<ElementLabel> out;
  std::visit(
      [&out](const auto& s) {
        s.validate();
        for (const auto& idx : enumerate(s)) out.emplace_back(idx);
      },
      spec);
  return out;
}

Eigen::MatrixXcd sample_elements(const SystemSpec& spec, const Grid& grid,
                                 const ComputeOptions& options) {
  const auto labels = element_labels(spec);
  const auto xs = grid.points();
  Eigen::MatrixXcd samples(static_cast<Eigen::Index>(xs.size()),
                           static_cast<Eigen::Index>(labels.size()));
  detail::parallel_for(labels.size(), options, [&](std::size_t u) {
    const FuncExpr e = detail::sampled_form(spec, labels[u], grid.domain());
    auto col = samples.col(static_cast<Eigen::Index>(u));
    for (std::size_t i = 0; i < xs.size(); ++i) col(static_cast<Eigen::Index>(i)) = e(xs[i]);
  });
  return samples;
}

namespace {

// sum_i w_i a_i conj(b_i) in index-ascending pairwise order with contiguous
// leaves so the inner loop vectorises.
complex weighted_dot(const complex* a, const complex* b, const double* w, std::size_t n) {
  constexpr std::size_t kLeaf = 256;
  if (n <= kLeaf) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ar = a[i].real(), ai = a[i].imag();
      const double br = b[i].real(), bi = b[i].imag();
      re += w[i] * (ar * br + ai * bi);
      im += w[i] * (ai * br - ar * bi);
    }
    return {re, im};
  }
  const std::size_t half = n / 2;
  return weighted_dot(a, b, w, half) + weighted_dot(a + half, b + half, w + half, n - half);
}

}  // namespace

Eigen::MatrixXcd gram_from_samples(const Eigen::MatrixXcd& samples, std::span<const double> weights,
                                   const ComputeOptions& options, double* max_asymmetry) {
  const auto n = static_cast<std::size_t>(samples.rows());
  const auto count = static_cast<std::size_t>(samples.cols());
  if (weights.size() != n) throw Error(ErrorCode::DegenerateGrid, "weights do not match samples");

  // Only the upper triangle is assembled; conj(a) conj(b) = conj(a b) holds
  // exactly in IEEE arithmetic, so the lower triangle would be its exact
  // conjugate and the assembled matrix is Hermitian by construction.
  Eigen::MatrixXcd gram(samples.cols(), samples.cols());
  detail::parallel_for(count, options, [&](std::size_t u) {
    const auto eu = static_cast<Eigen::Index>(u);
    const complex* cu = samples.col(eu).data();
    for (std::size_t v = u; v < count; ++v) {
      const auto ev = static_cast<Eigen::Index>(v);
      gram(eu, ev) = weighted_dot(cu, samples.col(ev).data(), weights.data(), n);
    }
    gram(eu, eu) = gram(eu, eu).real();
  });
  for (Eigen::Index u = 0; u < gram.rows(); ++u) {
    for (Eigen::Index v = 0; v < u; ++v) gram(u, v) = std::conj(gram(v, u));
  }
  if (max_asymmetry != nullptr) {
    *max_asymmetry = count == 0 ? 0.0 : (gram - gram.adjoint()).cwiseAbs().maxCoeff();
  }
  return gram;
}

GramReport gram_matrix(const SystemSpec& spec, const Grid& grid, const ComputeOptions& options) {
  auto labels = element_labels(spec);
  const Eigen::MatrixXcd samples = sample_elements(spec, grid, options);
  const auto w = grid.weights();
  double asym = 0.0;
  Eigen::MatrixXcd g = gram_from_samples(samples, w, options, &asym);
  return GramReport{std::move(g), std::move(labels), grid, asym};
}

}  // namespace mdg
