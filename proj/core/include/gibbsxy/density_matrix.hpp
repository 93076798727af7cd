// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "gibbsxy/statevector.hpp"

namespace gibbsxy {

/// Hermitian, unit-trace, positive semidefinite 2^n x 2^n matrix. Immutable
/// once built; copies are cheap enough at the sizes used here.
class DensityMatrix {
 public:
  /// Maximally mixed single qubit.
  DensityMatrix();
  /// Throws InvalidArgument unless the matrix is square with side 2^n_qubits.
  DensityMatrix(int n_qubits, Eigen::MatrixXcd matrix);

  static DensityMatrix from_real(int n_qubits, const Eigen::MatrixXd& matrix);
  static DensityMatrix diagonal(std::span<const double> probabilities);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  Complex trace() const { return matrix_.trace(); }
  /// Real eigenvalues, ascending.
  Eigen::VectorXd eigenvalues() const;
  /// Hermitian within tol, trace 1 within tol, eigenvalues >= -psd_tol.
  bool is_valid(double tol = 1e-12, double psd_tol = 1e-10) const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd matrix_;
};

/// |psi><psi|.
DensityMatrix statevector_to_density(const Statevector& state);

/// Reduced state on the listed qubits, kept in ascending order with the
/// lowest index most significant. Throws InvalidArgument for an empty or full
/// keep set, duplicates, or out-of-range indices.
DensityMatrix partial_trace(const Statevector& state, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// -sum p ln p with 0 ln 0 = 0. Entries in [-1e-10, 0) are treated as 0;
/// anything more negative throws Domain.
double von_neumann_entropy(std::span<const double> probabilities);
double von_neumann_entropy(const DensityMatrix& rho);

/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, via Hermitian eigendecompositions.
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(H rho) for a real symmetric H.
double expectation(const Eigen::MatrixXd& hamiltonian, const DensityMatrix& rho);

}  // namespace gibbsxy
