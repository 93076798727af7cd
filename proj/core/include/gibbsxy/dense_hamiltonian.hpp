// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gibbsxy/limits.hpp"
#include "gibbsxy/model.hpp"

namespace gibbsxy {

/// A real-weighted Pauli string, e.g. {0.25, "XX", {0, 1}}.
struct PauliTerm {
  double coefficient = 0.0;
  std::string paulis;      // characters from "IXYZ"
  std::vector<int> qubits;  // same length as paulis
};

/// Pauli decomposition of the chain Hamiltonian
///
///   H = -1/4 sum_n [(1 + gamma) X_n X_{n+1} + (1 - gamma) Y_n Y_{n+1}]
///       - h/2 sum_n Z_n,
///
/// with periodic indexing n + 1 -> 0. This is the ladder-operator form
/// -1/2 sum (s+ s- + s- s+ + gamma (s+ s+ + s- s-)) - h sum s+ s- plus the
/// constant N h / 2, which is the normalization under which the free-fermion
/// sector spectra hold exactly. Note that N = 2 visits the single bond twice.
std::vector<PauliTerm> xy_pauli_terms(const ModelParams& params);

/// Dense 2^N x 2^N real symmetric matrix of H. Qubit 0 is the most
/// significant bit of the basis index. Throws ResourceLimit above
/// limits.dense_sites.
Eigen::MatrixXd build_dense_hamiltonian(const ModelParams& params,
                                        const Limits& limits = {});

/// Accumulates coefficient * P into a 2^n x 2^n matrix.
void add_pauli_term(Eigen::MatrixXd& matrix, int n_qubits, const PauliTerm& term);

struct DenseSpectrum {
  Eigen::VectorXd energies;      // ascending
  Eigen::MatrixXd eigenvectors;  // columns, orthonormal
};

DenseSpectrum dense_spectrum(const ModelParams& params, const Limits& limits = {});

/// Eigenvalues of H restricted to one parity block. Positive parity is the
/// span of basis states with even popcount (an even number of |1> spins).
Eigen::VectorXd dense_sector_energies(const ModelParams& params, Parity parity,
                                      const Limits& limits = {});

}  // namespace gibbsxy
