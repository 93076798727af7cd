// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

namespace {

std::vector<Complex> zero_amplitudes(int n_qubits, const Limits& limits) {
  if (n_qubits < 1) raise(ErrorKind::InvalidArgument, "a statevector needs at least one qubit");
  if (n_qubits > limits.max_qubits) {
    raise(ErrorKind::ResourceLimit, "statevector limited to " +
                                        std::to_string(limits.max_qubits) + " qubits (got " +
                                        std::to_string(n_qubits) + ")");
  }
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  amps[0] = 1.0;
  return amps;
}

}  // namespace

Statevector::Statevector(int n_qubits, const Limits& limits)
    : n_qubits_(n_qubits), amplitudes_(zero_amplitudes(n_qubits, limits)) {}

Statevector::Statevector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

Statevector Statevector::basis_state(int n_qubits, std::uint64_t index, const Limits& limits) {
  Statevector state(n_qubits, limits);
  if (index >= state.dim()) raise(ErrorKind::InvalidArgument, "basis index out of range");
  state.amplitudes_[0] = 0.0;
  state.amplitudes_[index] = 1.0;
  return state;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    raise(ErrorKind::InvalidArgument, "amplitude count must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  return Statevector(n, std::move(amplitudes));
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

void Statevector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    raise(ErrorKind::InvalidArgument, "qubit index " + std::to_string(qubit) +
                                          " out of range for " + std::to_string(n_qubits_) +
                                          " qubits");
  }
}

Statevector& Statevector::apply_ry(int target, double theta) {
  return apply_controlled_ry({}, target, theta);
}

Statevector& Statevector::apply_controlled_ry(std::span<const Control> controls, int target,
                                              double theta) {
  check_qubit(target);
  std::uint64_t control_mask = 0;
  std::uint64_t control_value = 0;
  for (const auto& c : controls) {
    check_qubit(c.qubit);
    if (c.qubit == target) raise(ErrorKind::InvalidArgument, "control coincides with target");
    const std::uint64_t bit = mask(c.qubit);
    if (control_mask & bit) raise(ErrorKind::InvalidArgument, "duplicate control qubit");
    control_mask |= bit;
    if (c.polarity == ControlPolarity::OnOne) control_value |= bit;
  }

  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::uint64_t t = mask(target);
  const std::uint64_t dim = amplitudes_.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & t) || (i & control_mask) != control_value) continue;
    Complex& a0 = amplitudes_[i];
    Complex& a1 = amplitudes_[i | t];
    const Complex lo = a0;
    a0 = c * lo - s * a1;
    a1 = s * lo + c * a1;
  }
  return *this;
}

Statevector& Statevector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) raise(ErrorKind::InvalidArgument, "CNOT control equals target");
  const std::uint64_t cm = mask(control);
  const std::uint64_t t = mask(target);
  const std::uint64_t dim = amplitudes_.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & cm) && !(i & t)) std::swap(amplitudes_[i], amplitudes_[i | t]);
  }
  return *this;
}

Statevector& Statevector::apply_two_qubit(int q_a, int q_b, const Matrix4& matrix) {
  check_qubit(q_a);
  check_qubit(q_b);
  if (q_a == q_b) raise(ErrorKind::InvalidArgument, "two-qubit gate needs distinct qubits");
  if (!(matrix.adjoint() * matrix).isIdentity(1e-12)) {
    raise(ErrorKind::InvalidArgument, "two-qubit matrix is not unitary");
  }
  const std::uint64_t ma = mask(q_a);
  const std::uint64_t mb = mask(q_b);
  const std::uint64_t dim = amplitudes_.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & (ma | mb)) continue;
    const std::uint64_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
    Complex in[4];
    for (int k = 0; k < 4; ++k) in[k] = amplitudes_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += matrix(r, k) * in[k];
      amplitudes_[idx[r]] = acc;
    }
  }
  return *this;
}

Statevector zero_state(int n_qubits, const Limits& limits) { return Statevector(n_qubits, limits); }

std::vector<double> measurement_distribution(const Statevector& state) {
  std::vector<double> probs(state.dim());
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = std::norm(amps[i]);
  return probs;
}

std::vector<double> marginal_distribution(const Statevector& state,
                                          std::span<const int> qubits) {
  const int n = state.n_qubits();
  for (int q : qubits) {
    if (q < 0 || q >= n) raise(ErrorKind::InvalidArgument, "marginal qubit out of range");
  }
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  const auto amps = state.amplitudes();
  const auto k = static_cast<int>(qubits.size());
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    std::uint64_t local = 0;
    for (int j = 0; j < k; ++j) {
      const std::uint64_t bit = (i >> (n - 1 - qubits[static_cast<std::size_t>(j)])) & 1u;
      local |= bit << (k - 1 - j);
    }
    probs[local] += std::norm(amps[i]);
  }
  return probs;
}

}  // namespace gibbsxy
