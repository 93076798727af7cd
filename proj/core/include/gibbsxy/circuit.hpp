// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "gibbsxy/statevector.hpp"

namespace gibbsxy {

enum class GateKind { Ry, ControlledRy, Cnot, TwoQubit };

/// One bound gate. `params` records which entries of the originating
/// parameter vector the gate carries, for diagrams and bookkeeping only.
struct GateOp {
  GateKind kind = GateKind::Ry;
  std::vector<int> targets;  // one target, or (q_a, q_b) for TwoQubit
  std::vector<Control> controls;
  double angle = 0.0;
  Matrix4 matrix = Matrix4::Identity();
  std::vector<int> params;
  std::string label;  // display name, e.g. "rp"
};

/// Ordered gate list over a fixed register width. Immutable once returned
/// from a builder; apply() can place it at an offset inside a wider state.
class Circuit {
 public:
  explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  const std::vector<GateOp>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates index ranges and control/target overlap before appending.
  Circuit& add(GateOp gate);
  Circuit& append(const Circuit& other);

  /// Applies the gates to qubits [offset, offset + n_qubits) of state.
  void apply(Statevector& state, int offset = 0) const;

  /// One line per gate: "<index>: <kind> t=<targets> c=[<q><o|*>...] p=[...]".
  /// Open (o) controls fire on |0>, filled (*) on |1>.
  std::string diagram() const;

 private:
  int n_qubits_;
  std::vector<GateOp> gates_;
};

}  // namespace gibbsxy
