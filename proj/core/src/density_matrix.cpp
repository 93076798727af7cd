// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/density_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

namespace {

constexpr double kNegativeClamp = 1e-10;

// Complementary qubit lists and the bit layout helpers for a partial trace.
struct Split {
  std::vector<int> keep;
  std::vector<int> drop;
};

Split split_qubits(int n_qubits, std::span<const int> keep) {
  if (keep.empty() || static_cast<int>(keep.size()) >= n_qubits) {
    raise(ErrorKind::InvalidArgument, "partial trace needs a proper, non-empty keep set");
  }
  std::vector<bool> kept(static_cast<std::size_t>(n_qubits), false);
  for (int q : keep) {
    if (q < 0 || q >= n_qubits) raise(ErrorKind::InvalidArgument, "keep qubit out of range");
    if (kept[static_cast<std::size_t>(q)]) raise(ErrorKind::InvalidArgument, "duplicate keep qubit");
    kept[static_cast<std::size_t>(q)] = true;
  }
  Split s;
  for (int q = 0; q < n_qubits; ++q) (kept[static_cast<std::size_t>(q)] ? s.keep : s.drop).push_back(q);
  return s;
}

// Global index assembled from a local index over `qubits` (first = MSB).
std::uint64_t scatter(std::uint64_t local, const std::vector<int>& qubits, int n_qubits) {
  std::uint64_t global = 0;
  const auto k = static_cast<int>(qubits.size());
  for (int j = 0; j < k; ++j) {
    if ((local >> (k - 1 - j)) & 1u) global |= std::uint64_t{1} << (n_qubits - 1 - qubits[static_cast<std::size_t>(j)]);
  }
  return global;
}

// sqrt(rho) restricted to its support: columns V_k sqrt(d_k) for the
// eigenvalues above `cutoff`. Dropping the numerically-zero directions
// exactly keeps rank-deficient fidelities free of sqrt(1e-17) noise.
Eigen::MatrixXcd support_root(const Eigen::MatrixXcd& m, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > cutoff) keep.push_back(i);
  }
  Eigen::MatrixXcd out(m.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    out.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(keep[c]) * std::sqrt(ev(keep[c]));
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix() : DensityMatrix(1, 0.5 * Eigen::MatrixXcd::Identity(2, 2)) {}

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (n_qubits < 1 || matrix_.rows() != dim || matrix_.cols() != dim) {
    raise(ErrorKind::InvalidArgument, "density matrix must be 2^n x 2^n");
  }
}

DensityMatrix DensityMatrix::from_real(int n_qubits, const Eigen::MatrixXd& matrix) {
  return DensityMatrix(n_qubits, matrix.cast<Complex>());
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
  const std::size_t dim = probabilities.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    raise(ErrorKind::InvalidArgument, "probability vector length must be a power of two >= 2");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = probabilities[i];
  return DensityMatrix(std::countr_zero(dim), std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(n_qubits, Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool DensityMatrix::is_valid(double tol, double psd_tol) const {
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(trace() - Complex{1.0, 0.0}) > tol) return false;
  return eigenvalues().minCoeff() >= -psd_tol;
}

DensityMatrix statevector_to_density(const Statevector& state) {
  const auto amps = state.amplitudes();
  Eigen::Map<const Eigen::VectorXcd> psi(amps.data(), static_cast<Eigen::Index>(amps.size()));
  return DensityMatrix(state.n_qubits(), psi * psi.adjoint());
}

DensityMatrix partial_trace(const Statevector& state, std::span<const int> keep) {
  const int n = state.n_qubits();
  const Split s = split_qubits(n, keep);
  const std::uint64_t keep_dim = std::uint64_t{1} << s.keep.size();
  const std::uint64_t drop_dim = std::uint64_t{1} << s.drop.size();

  // psi reshaped to a keep_dim x drop_dim matrix M; rho = M M^dagger.
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(drop_dim));
  const auto amps = state.amplitudes();
  for (std::uint64_t r = 0; r < keep_dim; ++r) {
    const std::uint64_t base = scatter(r, s.keep, n);
    for (std::uint64_t c = 0; c < drop_dim; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = amps[base | scatter(c, s.drop, n)];
    }
  }
  return DensityMatrix(static_cast<int>(s.keep.size()), m * m.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.n_qubits();
  const Split s = split_qubits(n, keep);
  const std::uint64_t keep_dim = std::uint64_t{1} << s.keep.size();
  const std::uint64_t drop_dim = std::uint64_t{1} << s.drop.size();
  std::vector<std::uint64_t> keep_idx(keep_dim), drop_idx(drop_dim);
  for (std::uint64_t i = 0; i < keep_dim; ++i) keep_idx[i] = scatter(i, s.keep, n);
  for (std::uint64_t i = 0; i < drop_dim; ++i) drop_idx[i] = scatter(i, s.drop, n);

  const auto& full = rho.matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(keep_dim));
  for (std::uint64_t r = 0; r < keep_dim; ++r) {
    for (std::uint64_t c = 0; c < keep_dim; ++c) {
      Complex acc = 0.0;
      for (std::uint64_t d = 0; d < drop_dim; ++d) {
        acc += full(static_cast<Eigen::Index>(keep_idx[r] | drop_idx[d]),
                    static_cast<Eigen::Index>(keep_idx[c] | drop_idx[d]));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix(static_cast<int>(s.keep.size()), std::move(out));
}

double von_neumann_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (!(p >= -kNegativeClamp)) {
      raise(ErrorKind::Domain, "probability " + std::to_string(p) + " is negative");
    }
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd eig = rho.eigenvalues();
  return von_neumann_entropy(std::span<const double>(eig.data(), static_cast<std::size_t>(eig.size())));
}

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    raise(ErrorKind::InvalidArgument, "fidelity operands differ in dimension");
  }
  // sqrt(rho) sigma sqrt(rho) and R^dagger sigma R share their nonzero spectrum.
  const Eigen::MatrixXcd root = support_root(rho.matrix(), 1e-14);
  Eigen::MatrixXcd inner = root.adjoint() * sigma.matrix() * root;
  inner = 0.5 * (inner + inner.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(inner, Eigen::EigenvaluesOnly);
  double trace_root = 0.0;
  for (double x : solver.eigenvalues()) {
    if (x > 0.0) trace_root += std::sqrt(x);
  }
  return trace_root * trace_root;
}

double expectation(const Eigen::MatrixXd& hamiltonian, const DensityMatrix& rho) {
  if (hamiltonian.rows() != rho.dim() || hamiltonian.cols() != rho.dim()) {
    raise(ErrorKind::InvalidArgument, "Hamiltonian and state differ in dimension");
  }
  // Tr(H rho) = sum_ij H_ij rho_ji; real for Hermitian arguments.
  return (hamiltonian.cast<Complex>().cwiseProduct(rho.matrix().transpose())).sum().real();
}

}  // namespace gibbsxy
