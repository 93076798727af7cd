// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/circuit.hpp"

#include <sstream>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

namespace {

const char* kind_name(const GateOp& gate) {
  if (!gate.label.empty()) return gate.label.c_str();
  switch (gate.kind) {
    case GateKind::Ry:
      return "ry";
    case GateKind::ControlledRy:
      return "cry";
    case GateKind::Cnot:
      return "cx";
    case GateKind::TwoQubit:
      return "u4";
  }
  return "?";
}

}  // namespace

Circuit& Circuit::add(GateOp gate) {
  const std::size_t want_targets = gate.kind == GateKind::TwoQubit ? 2 : 1;
  if (gate.targets.size() != want_targets) {
    raise(ErrorKind::InvalidArgument, "gate has the wrong number of targets");
  }
  if (gate.kind == GateKind::Cnot && gate.controls.size() != 1) {
    raise(ErrorKind::InvalidArgument, "CNOT needs exactly one control");
  }
  std::vector<bool> used(static_cast<std::size_t>(n_qubits_), false);
  auto claim = [&](int q) {
    if (q < 0 || q >= n_qubits_) raise(ErrorKind::InvalidArgument, "gate qubit out of range");
    if (used[static_cast<std::size_t>(q)]) raise(ErrorKind::InvalidArgument, "gate qubits overlap");
    used[static_cast<std::size_t>(q)] = true;
  };
  for (int t : gate.targets) claim(t);
  for (const auto& c : gate.controls) claim(c.qubit);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) raise(ErrorKind::InvalidArgument, "circuit widths differ");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

void Circuit::apply(Statevector& state, int offset) const {
  if (offset < 0 || offset + n_qubits_ > state.n_qubits()) {
    raise(ErrorKind::InvalidArgument, "circuit does not fit the register at this offset");
  }
  std::vector<Control> shifted;
  for (const auto& gate : gates_) {
    switch (gate.kind) {
      case GateKind::Ry:
        state.apply_ry(gate.targets[0] + offset, gate.angle);
        break;
      case GateKind::ControlledRy:
        shifted = gate.controls;
        for (auto& c : shifted) c.qubit += offset;
        state.apply_controlled_ry(shifted, gate.targets[0] + offset, gate.angle);
        break;
      case GateKind::Cnot:
        state.apply_cnot(gate.controls[0].qubit + offset, gate.targets[0] + offset);
        break;
      case GateKind::TwoQubit:
        state.apply_two_qubit(gate.targets[0] + offset, gate.targets[1] + offset, gate.matrix);
        break;
    }
  }
}

std::string Circuit::diagram() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const auto& g = gates_[i];
    out << i << ": " << kind_name(g) << " t=";
    for (std::size_t k = 0; k < g.targets.size(); ++k) out << (k ? "," : "") << g.targets[k];
    out << " c=[";
    for (std::size_t k = 0; k < g.controls.size(); ++k) {
      out << (k ? " " : "") << g.controls[k].qubit
          << (g.controls[k].polarity == ControlPolarity::OnOne ? '*' : 'o');
    }
    out << "] p=[";
    for (std::size_t k = 0; k < g.params.size(); ++k) out << (k ? "," : "") << g.params[k];
    out << "]\n";
  }
  return out.str();
}

}  // namespace gibbsxy
