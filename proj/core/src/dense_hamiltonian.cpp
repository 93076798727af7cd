// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/dense_hamiltonian.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

namespace {

void check_dense_cap(const ModelParams& params, const Limits& limits) {
  params.validate();
  if (params.n_sites > limits.dense_sites) {
    raise(ErrorKind::ResourceLimit,
          "dense Hamiltonian limited to n_sites <= " +
              std::to_string(limits.dense_sites) + " (got " +
              std::to_string(params.n_sites) + ")");
  }
}

}  // namespace

std::vector<PauliTerm> xy_pauli_terms(const ModelParams& params) {
  params.validate();
  const int n = params.n_sites;
  std::vector<PauliTerm> terms;
  for (int site = 0; site < n; ++site) {
    const int next = (site + 1) % n;
    terms.push_back({-0.25 * (1.0 + params.gamma), "XX", {site, next}});
    terms.push_back({-0.25 * (1.0 - params.gamma), "YY", {site, next}});
  }
  for (int site = 0; site < n; ++site) {
    terms.push_back({-0.5 * params.field_h, "Z", {site}});
  }
  return terms;
}

void add_pauli_term(Eigen::MatrixXd& matrix, int n_qubits, const PauliTerm& term) {
  if (term.paulis.size() != term.qubits.size()) {
    raise(ErrorKind::InvalidArgument, "Pauli string and qubit list differ in length");
  }
  std::uint64_t flip = 0;
  std::uint64_t phase_z = 0;  // bits whose value contributes (-1)^b
  int y_count = 0;
  for (std::size_t i = 0; i < term.paulis.size(); ++i) {
    const int q = term.qubits[i];
    if (q < 0 || q >= n_qubits) raise(ErrorKind::InvalidArgument, "Pauli qubit out of range");
    const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - q);
    switch (term.paulis[i]) {
      case 'I':
        break;
      case 'X':
        flip ^= bit;
        break;
      case 'Y':  // Y|b> = i (-1)^b |1-b>
        flip ^= bit;
        phase_z ^= bit;
        ++y_count;
        break;
      case 'Z':
        phase_z ^= bit;
        break;
      default:
        raise(ErrorKind::InvalidArgument, std::string("unknown Pauli '") + term.paulis[i] + "'");
    }
  }
  // i^y_count is real for the Hermitian strings used here (even Y count).
  if (y_count % 2 != 0) {
    raise(ErrorKind::InvalidArgument, "odd number of Y factors gives a non-real matrix");
  }
  const double i_power = (y_count / 2) % 2 == 0 ? 1.0 : -1.0;
  const auto dim = static_cast<std::uint64_t>(matrix.rows());
  for (std::uint64_t col = 0; col < dim; ++col) {
    const double sign = (std::popcount(col & phase_z) % 2 == 0) ? 1.0 : -1.0;
    const std::uint64_t row = col ^ flip;
    matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
        term.coefficient * i_power * sign;
  }
}

Eigen::MatrixXd build_dense_hamiltonian(const ModelParams& params, const Limits& limits) {
  check_dense_cap(params, limits);
  const Eigen::Index dim = Eigen::Index{1} << params.n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& term : xy_pauli_terms(params)) add_pauli_term(h, params.n_sites, term);
  return h;
}

DenseSpectrum dense_spectrum(const ModelParams& params, const Limits& limits) {
  const Eigen::MatrixXd h = build_dense_hamiltonian(params, limits);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    raise(ErrorKind::InvalidArgument, "dense eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd dense_sector_energies(const ModelParams& params, Parity parity,
                                      const Limits& limits) {
  const Eigen::MatrixXd h = build_dense_hamiltonian(params, limits);
  const int want = parity == Parity::Positive ? 0 : 1;
  std::vector<Eigen::Index> block;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (std::popcount(static_cast<std::uint64_t>(i)) % 2 == want) block.push_back(i);
  }
  const auto m = static_cast<Eigen::Index>(block.size());
  Eigen::MatrixXd sub(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c) sub(r, c) = h(block[r], block[c]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace gibbsxy
