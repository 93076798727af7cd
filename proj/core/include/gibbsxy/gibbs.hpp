// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "gibbsxy/dense_hamiltonian.hpp"
#include "gibbsxy/density_matrix.hpp"

namespace gibbsxy {

/// Exact thermal state exp(-beta H) / Z from dense diagonalization.
struct GibbsTarget {
  double beta = 0.0;
  Eigen::VectorXd energies;       // ascending, as from dense_spectrum
  Eigen::VectorXd probabilities;  // Boltzmann weight of each energy
  DensityMatrix density_matrix;
  double log_partition_function = 0.0;

  /// Z itself; may overflow to inf at large beta * |E_min|.
  double partition_function() const;
  /// -ln Z / beta. Requires beta > 0.
  double free_energy() const;
};

/// Throws Domain for negative or non-finite beta. Exponentials are shifted by
/// the minimum energy before summation.
GibbsTarget gibbs_target(const ModelParams& params, double beta, const Limits& limits = {});
GibbsTarget gibbs_target(const DenseSpectrum& spectrum, double beta);

}  // namespace gibbsxy
