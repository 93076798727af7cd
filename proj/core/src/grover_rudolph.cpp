// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/grover_rudolph.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

std::size_t GRAngles::parameter_count(int n_qubits) {
  return (std::size_t{1} << n_qubits) - 1;
}

GRAngles GRAngles::zeros(int n_qubits) {
  if (n_qubits < 1) raise(ErrorKind::InvalidArgument, "Grover-Rudolph needs n_qubits >= 1");
  return {n_qubits, std::vector<double>(parameter_count(n_qubits), 0.0)};
}

void GRAngles::validate() const {
  if (n_qubits < 1 || n_qubits > 30) raise(ErrorKind::InvalidArgument, "Grover-Rudolph n_qubits out of range");
  if (thetas.size() != parameter_count(n_qubits)) {
    raise(ErrorKind::InvalidArgument, "expected " + std::to_string(parameter_count(n_qubits)) +
                                          " angles for " + std::to_string(n_qubits) +
                                          " qubits, got " + std::to_string(thetas.size()));
  }
  for (double t : thetas) {
    if (!std::isfinite(t)) raise(ErrorKind::InvalidArgument, "non-finite Grover-Rudolph angle");
  }
}

Circuit gr_circuit(const GRAngles& angles) {
  angles.validate();
  const int n = angles.n_qubits;
  Circuit circuit(n);
  circuit.add({GateKind::Ry, {0}, {}, angles.thetas[0], Matrix4::Identity(), {0}, {}});
  for (int k = 1; k < n; ++k) {
    const int first = (1 << k) - 1;
    for (int l = 0; l < (1 << k); ++l) {
      GateOp gate;
      gate.kind = GateKind::ControlledRy;
      gate.targets = {k};
      for (int q = 0; q < k; ++q) {
        const bool one = (l >> (k - 1 - q)) & 1;
        gate.controls.push_back({q, one ? ControlPolarity::OnOne : ControlPolarity::OnZero});
      }
      gate.angle = angles.thetas[static_cast<std::size_t>(first + l)];
      gate.params = {first + l};
      circuit.add(std::move(gate));
    }
  }
  return circuit;
}

GRAngles angles_from_distribution(std::span<const double> p, double norm_tol) {
  const std::size_t dim = p.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    raise(ErrorKind::InvalidArgument, "distribution length must be a power of two >= 2");
  }
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      raise(ErrorKind::InvalidArgument, "distribution entries must be finite and non-negative");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > norm_tol) {
    raise(ErrorKind::InvalidArgument, "distribution sums to " + std::to_string(total) + ", not 1");
  }

  const int n = std::countr_zero(dim);
  // mass[level] holds the 2^level subtree sums; the leaves are p itself.
  std::vector<std::vector<double>> mass(static_cast<std::size_t>(n) + 1);
  mass[static_cast<std::size_t>(n)].assign(p.begin(), p.end());
  for (int level = n - 1; level >= 0; --level) {
    const auto& below = mass[static_cast<std::size_t>(level) + 1];
    auto& here = mass[static_cast<std::size_t>(level)];
    here.resize(std::size_t{1} << level);
    for (std::size_t i = 0; i < here.size(); ++i) here[i] = below[2 * i] + below[2 * i + 1];
  }

  GRAngles angles = GRAngles::zeros(n);
  for (int k = 0; k < n; ++k) {
    const auto& children = mass[static_cast<std::size_t>(k) + 1];
    for (std::size_t l = 0; l < (std::size_t{1} << k); ++l) {
      const double left = children[2 * l];
      const double right = children[2 * l + 1];
      const double theta = (left + right > 0.0) ? 2.0 * std::atan2(std::sqrt(right), std::sqrt(left)) : 0.0;
      angles.thetas[(std::size_t{1} << k) - 1 + l] = theta;
    }
  }
  return angles;
}

std::vector<double> gr_distribution(const GRAngles& angles) {
  Statevector state(angles.n_qubits);
  gr_circuit(angles).apply(state);
  return measurement_distribution(state);
}

}  // namespace gibbsxy
