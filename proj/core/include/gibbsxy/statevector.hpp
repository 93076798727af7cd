// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gibbsxy/limits.hpp"

namespace gibbsxy {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix4cd;

enum class ControlPolarity {
  OnOne,   // filled dot
  OnZero,  // open dot
};

struct Control {
  int qubit = 0;
  ControlPolarity polarity = ControlPolarity::OnOne;
};

/// Dense n-qubit pure state. Qubit 0 is the most significant bit of the basis
/// index, so |q0 q1 ... q_{n-1}> has index sum_q b_q 2^(n-1-q).
///
/// Gates mutate the amplitudes in place and return *this. A Statevector has a
/// single writer; distinct instances are independent.
class Statevector {
 public:
  /// |0...0> on n_qubits. Throws ResourceLimit above limits.max_qubits.
  explicit Statevector(int n_qubits, const Limits& limits = {});

  static Statevector basis_state(int n_qubits, std::uint64_t index,
                                 const Limits& limits = {});
  /// Takes ownership of amplitudes; the length must be a power of two.
  /// No normalization is applied.
  static Statevector from_amplitudes(std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;

  Statevector& apply_ry(int target, double theta);
  /// Ry on target restricted to basis states matching every control polarity.
  /// With no controls this is a plain Ry.
  Statevector& apply_controlled_ry(std::span<const Control> controls, int target,
                                   double theta);
  Statevector& apply_cnot(int control, int target);
  /// Applies a 4x4 unitary on (q_a, q_b) with q_a the more significant bit of
  /// the local index 2 b_a + b_b. Throws InvalidArgument if the matrix is not
  /// unitary within 1e-12.
  Statevector& apply_two_qubit(int q_a, int q_b, const Matrix4& matrix);

 private:
  Statevector(int n_qubits, std::vector<Complex> amplitudes);

  std::uint64_t mask(int qubit) const {
    return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
  }
  void check_qubit(int qubit) const;

  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

Statevector zero_state(int n_qubits, const Limits& limits = {});

/// |a_i|^2 for every basis state.
std::vector<double> measurement_distribution(const Statevector& state);

/// Marginal distribution of the computational-basis measurement of the
/// given qubits (ordered; the first listed is the most significant).
std::vector<double> marginal_distribution(const Statevector& state,
                                          std::span<const int> qubits);

}  // namespace gibbsxy
