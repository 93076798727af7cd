// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/gibbs.hpp"

#include <bit>
#include <cmath>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

double GibbsTarget::partition_function() const { return std::exp(log_partition_function); }

double GibbsTarget::free_energy() const {
  if (!(beta > 0.0)) raise(ErrorKind::Domain, "free energy needs beta > 0");
  return -log_partition_function / beta;
}

GibbsTarget gibbs_target(const DenseSpectrum& spectrum, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    raise(ErrorKind::Domain, "beta must be finite and non-negative");
  }
  const Eigen::VectorXd& e = spectrum.energies;
  const double e_min = e.minCoeff();
  Eigen::VectorXd w = (-beta * (e.array() - e_min)).exp().matrix();
  const double sum = w.sum();
  w /= sum;

  const auto dim = static_cast<std::uint64_t>(e.size());
  const int n_qubits = std::countr_zero(dim);
  const Eigen::MatrixXd& v = spectrum.eigenvectors;
  Eigen::MatrixXd rho = v * w.asDiagonal() * v.transpose();
  rho = 0.5 * (rho + rho.transpose()).eval();

  return GibbsTarget{beta, e, w, DensityMatrix::from_real(n_qubits, rho),
                     -beta * e_min + std::log(sum)};
}

GibbsTarget gibbs_target(const ModelParams& params, double beta, const Limits& limits) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    raise(ErrorKind::Domain, "beta must be finite and non-negative");
  }
  return gibbs_target(dense_spectrum(params, limits), beta);
}

}  // namespace gibbsxy
