// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/brickwall.hpp"

#include <cmath>
#include <string>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

Eigen::Matrix4d rp_matrix(double phi_i, double phi_j) {
  const double cp = std::cos(0.5 * (phi_i + phi_j));
  const double sp = std::sin(0.5 * (phi_i + phi_j));
  const double cm = std::cos(0.5 * (phi_i - phi_j));
  const double sm = std::sin(0.5 * (phi_i - phi_j));
  Eigen::Matrix4d m;
  // clang-format off
  m <<  cp, 0.0, 0.0,  sp,
       0.0,  cm, -sm, 0.0,
       0.0,  sm,  cm, 0.0,
       -sp, 0.0, 0.0,  cp;
  // clang-format on
  return m;
}

std::size_t BrickwallParams::parameter_count(int n_qubits, int n_layers) {
  return 2 * static_cast<std::size_t>(n_qubits) * static_cast<std::size_t>(n_layers);
}

void BrickwallParams::validate() const {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    raise(ErrorKind::InvalidArgument, "brick-wall needs an even qubit count >= 2 (got " +
                                          std::to_string(n_qubits) + ")");
  }
  if (n_layers < 1) raise(ErrorKind::InvalidArgument, "brick-wall needs at least one layer");
  if (phis.size() != parameter_count(n_qubits, n_layers)) {
    raise(ErrorKind::InvalidArgument, "expected " + std::to_string(parameter_count(n_qubits, n_layers)) +
                                          " brick-wall angles, got " + std::to_string(phis.size()));
  }
}

std::vector<std::pair<int, int>> brickwall_bonds(int n_qubits) {
  std::vector<std::pair<int, int>> bonds;
  for (int q = 0; q + 1 < n_qubits; q += 2) bonds.emplace_back(q, q + 1);
  for (int q = 1; q < n_qubits; q += 2) bonds.emplace_back(q, (q + 1) % n_qubits);
  return bonds;
}

Circuit brickwall_circuit(const BrickwallParams& params) {
  params.validate();
  Circuit circuit(params.n_qubits);
  const auto bonds = brickwall_bonds(params.n_qubits);
  int next = 0;
  for (int layer = 0; layer < params.n_layers; ++layer) {
    for (const auto& [a, b] : bonds) {
      GateOp gate;
      gate.kind = GateKind::TwoQubit;
      gate.targets = {a, b};
      gate.matrix = rp_matrix(params.phis[static_cast<std::size_t>(next)],
                              params.phis[static_cast<std::size_t>(next) + 1])
                        .cast<Complex>();
      gate.params = {next, next + 1};
      gate.label = "rp";
      circuit.add(std::move(gate));
      next += 2;
    }
  }
  return circuit;
}

}  // namespace gibbsxy
