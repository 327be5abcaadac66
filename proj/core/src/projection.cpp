// Copyright 2026 The mdgabor Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "mdgabor/analysis.hpp"
#include "mdgabor/error.hpp"
#include "sampling.hpp"

namespace mdg {

double projection_residual(const FuncExpr& f, const SystemSpec& spec, const Grid& grid,
                           const ComputeOptions& options) {
  const FuncExpr probe = detail::probe_form(f, spec, grid.domain());
  const Eigen::MatrixXcd samples = sample_elements(spec, grid, options);
  const auto xs = grid.points();
  const auto w = grid.weights();
  const std::vector<complex> fs = probe.sample(xs);

  const Eigen::MatrixXcd gram = gram_from_samples(samples, w, options);
  const auto count = gram.rows();
  Eigen::VectorXcd rhs(count);
  for (Eigen::Index u = 0; u < count; ++u) {
    const auto col = samples.col(u);
    rhs(u) = inner_product(fs, std::span<const complex>(col.data(), static_cast<std::size_t>(col.size())), w);
  }

  // Normal equations sum_v c_v <e_v, e_u> = <f, e_u>, i.e. conj(G) c = rhs.
  const double ridge = kProjectionRidge * gram.trace().real() / static_cast<double>(count);
  Eigen::MatrixXcd system = gram.conjugate();
  system.diagonal().array() += ridge;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(system);
  const auto& ev = solver.eigenvalues();
  const double lo = ev.minCoeff();
  const double hi = ev.maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxGramCondition) {
    std::ostringstream msg;
    msg << "regularised Gram condition number " << (lo > 0.0 ? hi / lo : INFINITY)
        << " exceeds " << kMaxGramCondition;
    throw Error(ErrorCode::SingularGram, msg.str());
  }
  const Eigen::VectorXcd coeffs =
      solver.eigenvectors() *
      (ev.cwiseInverse().cast<complex>().asDiagonal() * (solver.eigenvectors().adjoint() * rhs));

  const Eigen::VectorXcd approx = samples * coeffs;
  std::vector<double> terms(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    terms[i] = w[i] * std::norm(fs[i] - approx(static_cast<Eigen::Index>(i)));
  }
  return std::sqrt(std::max(0.0, pairwise_sum(terms)));
}

}  // namespace mdg
