// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gibbsxy/circuit.hpp"
#include "gibbsxy/density_matrix.hpp"
#include "gibbsxy/error.hpp"
#include "gibbsxy/gibbs.hpp"
#include "gibbsxy/limits.hpp"
#include "gibbsxy/model.hpp"

namespace gibbsxy {

enum class AncillaMode {
  FullGR,     // 2^N - 1 free angles per ancilla layer
  ReducedXY,  // 7 free angles per layer, N = 4 only
};

enum class OptimizerKind {
  QuasiNewton,   // BFGS on central-difference gradients
  DirectSearch,  // Nelder-Mead simplex
};

const char* to_string(AncillaMode mode) noexcept;
const char* to_string(OptimizerKind kind) noexcept;

struct VqaConfig {
  ModelParams model;
  double beta = 1.0;
  AncillaMode ancilla_mode = AncillaMode::FullGR;
  int ancilla_layers = 1;  // repetitions of the loader on the ancilla register
  int system_layers = 3;   // brick-wall layers on the system register
  int restarts = 20;
  OptimizerKind optimizer = OptimizerKind::QuasiNewton;
  int max_iterations = 2000;
  double gradient_step = 1e-6;
  double f_tolerance = 1e-10;
  double gradient_tolerance = 1e-8;
  std::uint64_t seed = 0;
  int jobs = 1;  // restart worker threads; 0 picks the hardware concurrency
  Limits limits;

  /// Throws InvalidModel / Domain / InvalidArgument / ResourceLimit.
  void validate() const;
  std::size_t theta_count() const;
  std::size_t phi_count() const;
};

/// Everything reported for one parameter point.
struct PqcEvaluation {
  DensityMatrix system_state;                 // Tr_A |psi><psi|
  std::vector<double> ancilla_probabilities;  // computational-basis marginal
  double energy = 0.0;                        // Tr(H rho_S)
  double entropy = 0.0;                       // S from the ancilla marginal
  double free_energy = 0.0;                   // energy - entropy / beta
  double fidelity = 0.0;                      // against the exact Gibbs state
};

/// The composed circuit for one configuration: U_A on ancilla qubits 0..N-1,
/// CNOT from ancilla i to system qubit N + i, then U_S on qubits N..2N-1.
/// Holds the dense Hamiltonian and exact Gibbs target; const methods are
/// safe to call from several threads.
class GibbsPqc {
 public:
  explicit GibbsPqc(VqaConfig config);

  const VqaConfig& config() const { return config_; }
  const Eigen::MatrixXd& hamiltonian() const { return hamiltonian_; }
  const GibbsTarget& target() const { return target_; }
  double exact_free_energy() const { return target_.free_energy(); }

  /// Reduced-mode angles go through expand_reduced_clamped, so any real
  /// vector is accepted; on the arccos domain this equals expand_reduced.
  Circuit ancilla_circuit(std::span<const double> thetas) const;
  Circuit system_circuit(std::span<const double> phis) const;

  Statevector compose(std::span<const double> thetas, std::span<const double> phis) const;
  /// Uses rho_S = U_S diag(p) U_S^T, where p is the ancilla distribution:
  /// every gate is real and the CNOTs copy the ancilla basis state, so the
  /// 2N-qubit register is never built. Agrees with free_energy_full.
  double free_energy(std::span<const double> thetas, std::span<const double> phis) const;
  /// Same value from the simulated 2N-qubit statevector.
  double free_energy_full(std::span<const double> thetas, std::span<const double> phis) const;
  /// Packed layout: thetas followed by phis.
  double free_energy(std::span<const double> packed) const;
  PqcEvaluation evaluate(std::span<const double> thetas, std::span<const double> phis) const;

 private:
  void check_sizes(std::span<const double> thetas, std::span<const double> phis) const;
  std::vector<double> ancilla_distribution(std::span<const double> thetas) const;
  Eigen::MatrixXd system_unitary(std::span<const double> phis) const;

  VqaConfig config_;
  Eigen::MatrixXd hamiltonian_;
  GibbsTarget target_;
};

Statevector compose_pqc(std::span<const double> thetas, std::span<const double> phis,
                        const VqaConfig& config);
double free_energy(std::span<const double> thetas, std::span<const double> phis,
                   const VqaConfig& config);
PqcEvaluation evaluate(std::span<const double> thetas, std::span<const double> phis,
                       const VqaConfig& config);

/// Generalized Helmholtz free energy Tr(H rho) - S(rho) / beta with the
/// entropy taken from the eigenvalues of rho.
double free_energy_of(const DensityMatrix& rho, const Eigen::MatrixXd& hamiltonian, double beta);

struct RestartRecord {
  int index = 0;
  double free_energy = 0.0;
  double fidelity = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string status;
  std::vector<double> thetas;
  std::vector<double> phis;
};

struct VqaResult {
  VqaConfig config;
  double exact_free_energy = 0.0;
  RestartRecord best;           // lowest free energy
  RestartRecord max_fidelity;   // highest fidelity to the exact Gibbs state
  DensityMatrix prepared_state;  // system state of `best`
  std::vector<RestartRecord> restarts;  // in restart-index order

  double best_free_energy() const { return best.free_energy; }
  double fidelity() const { return best.fidelity; }
};

/// Thrown when no restart produced a finite objective; carries the log.
class OptimizationError : public Error {
 public:
  OptimizationError(const std::string& what, std::vector<RestartRecord> log)
      : Error(ErrorKind::OptimizationFailed, what), log_(std::move(log)) {}
  const std::vector<RestartRecord>& log() const { return log_; }

 private:
  std::vector<RestartRecord> log_;
};

/// Initial parameters of one restart, drawn from its own stream seeded by
/// (config.seed, index): brick-wall and full-loader angles uniform in
/// [0, 2 pi); reduced free angles uniform in (0, pi), redrawn until the
/// theta_4 relation is defined.
std::pair<std::vector<double>, std::vector<double>> initial_parameters(const VqaConfig& config,
                                                                       int index);

/// Multi-start minimization of the free energy. Restart i depends only on
/// (config, i), so results are identical for any `jobs` value and restart
/// sets are nested as `restarts` grows.
VqaResult optimize(const VqaConfig& config);

/// One restart from explicit starting parameters.
RestartRecord run_restart(const GibbsPqc& pqc, std::vector<double> thetas,
                          std::vector<double> phis, int index = 0);

}  // namespace gibbsxy
