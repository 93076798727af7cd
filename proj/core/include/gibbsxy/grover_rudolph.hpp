// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "gibbsxy/circuit.hpp"

namespace gibbsxy {

/// Angles of the n-qubit Grover-Rudolph loader, one per node of the binary
/// tree: level k (targeting qubit k) owns indices 2^k - 1 ... 2^(k+1) - 2, and
/// the node for control bitstring l (qubit 0 most significant) is 2^k - 1 + l.
struct GRAngles {
  int n_qubits = 0;
  std::vector<double> thetas;  // length 2^n - 1

  static GRAngles zeros(int n_qubits);
  static std::size_t parameter_count(int n_qubits);
  /// Throws InvalidArgument on a length mismatch or non-finite entry.
  void validate() const;
};

/// Ry(theta_0) on qubit 0, then for each level k the 2^k multi-controlled Ry
/// gates on qubit k, controls enumerating the bitstrings of qubits 0..k-1.
Circuit gr_circuit(const GRAngles& angles);

/// Inverts the loader: each node gets 2 arctan sqrt(P_right / P_left) over the
/// two halves of its index range; zero-mass nodes get 0. Angles lie in [0, pi].
/// Throws InvalidArgument unless p has length 2^n (n >= 1), no negative
/// entries, and sums to 1 within norm_tol.
GRAngles angles_from_distribution(std::span<const double> p, double norm_tol = 1e-10);

/// Simulates gr_circuit from |0...0> and returns the measured distribution.
std::vector<double> gr_distribution(const GRAngles& angles);

}  // namespace gibbsxy
