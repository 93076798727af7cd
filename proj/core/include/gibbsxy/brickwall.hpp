// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "gibbsxy/circuit.hpp"

namespace gibbsxy {

/// Parity-preserving two-qubit rotation in the basis |00>, |01>, |10>, |11>:
/// a rotation by (phi_i + phi_j)/2 mixing |00> and |11>, and one by
/// (phi_i - phi_j)/2 mixing |01> and |10>.
Eigen::Matrix4d rp_matrix(double phi_i, double phi_j);

/// Parameters of the periodic brick-wall: 2 angles per R_P gate, N gates per
/// layer, gates in the order given by brickwall_bonds.
struct BrickwallParams {
  int n_qubits = 0;
  int n_layers = 0;
  std::vector<double> phis;

  static std::size_t parameter_count(int n_qubits, int n_layers);
  void validate() const;
};

/// Gate positions of one layer: (0,1), (2,3), ..., then (1,2), (3,4), ...,
/// (N-1, 0). The first qubit of each pair is the more significant one.
std::vector<std::pair<int, int>> brickwall_bonds(int n_qubits);

Circuit brickwall_circuit(const BrickwallParams& params);

}  // namespace gibbsxy
