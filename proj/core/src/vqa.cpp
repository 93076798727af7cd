// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/vqa.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "gibbsxy/brickwall.hpp"
#include "gibbsxy/dense_hamiltonian.hpp"
#include "gibbsxy/grover_rudolph.hpp"
#include "gibbsxy/minimizer.hpp"
#include "gibbsxy/reduced_xy.hpp"

namespace gibbsxy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t thetas_per_layer(const VqaConfig& config) {
  return config.ancilla_mode == AncillaMode::ReducedXY
             ? ReducedXYAngles::kFreeIndices.size()
             : GRAngles::parameter_count(config.model.n_sites);
}

std::vector<int> range(int first, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), first);
  return out;
}

}  // namespace

const char* to_string(AncillaMode mode) noexcept {
  return mode == AncillaMode::ReducedXY ? "reduced_xy" : "full_gr";
}

const char* to_string(OptimizerKind kind) noexcept {
  return kind == OptimizerKind::DirectSearch ? "direct-search" : "quasi-newton";
}

void VqaConfig::validate() const {
  model.validate();
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    raise(ErrorKind::Domain, "VQA needs a finite beta > 0 (the entropy weight is 1/beta)");
  }
  if (ancilla_mode == AncillaMode::ReducedXY && model.n_sites != 4) {
    raise(ErrorKind::InvalidModel, "reduced_xy ancilla mode requires n_sites = 4");
  }
  if (ancilla_layers < 1) raise(ErrorKind::InvalidArgument, "ancilla_layers must be >= 1");
  if (system_layers < 1) raise(ErrorKind::InvalidArgument, "system_layers must be >= 1");
  if (restarts < 1) raise(ErrorKind::InvalidArgument, "restarts must be >= 1");
  if (max_iterations < 1) raise(ErrorKind::InvalidArgument, "max_iterations must be >= 1");
  if (!(gradient_step > 0.0)) raise(ErrorKind::InvalidArgument, "gradient_step must be > 0");
  if (jobs < 0) raise(ErrorKind::InvalidArgument, "jobs must be >= 0");
  if (2 * model.n_sites > limits.max_qubits) {
    raise(ErrorKind::ResourceLimit, "the PQC needs " + std::to_string(2 * model.n_sites) +
                                        " qubits; limit is " + std::to_string(limits.max_qubits));
  }
  if (model.n_sites > limits.dense_sites) {
    raise(ErrorKind::ResourceLimit, "dense Hamiltonian limited to n_sites <= " +
                                        std::to_string(limits.dense_sites));
  }
}

std::size_t VqaConfig::theta_count() const {
  return thetas_per_layer(*this) * static_cast<std::size_t>(ancilla_layers);
}

std::size_t VqaConfig::phi_count() const {
  return BrickwallParams::parameter_count(model.n_sites, system_layers);
}

GibbsPqc::GibbsPqc(VqaConfig config) : config_(std::move(config)) {
  config_.validate();
  const DenseSpectrum spectrum = dense_spectrum(config_.model, config_.limits);
  hamiltonian_ = build_dense_hamiltonian(config_.model, config_.limits);
  target_ = gibbs_target(spectrum, config_.beta);
}

void GibbsPqc::check_sizes(std::span<const double> thetas, std::span<const double> phis) const {
  if (thetas.size() != config_.theta_count() || phis.size() != config_.phi_count()) {
    raise(ErrorKind::InvalidArgument,
          "expected " + std::to_string(config_.theta_count()) + " thetas and " +
              std::to_string(config_.phi_count()) + " phis, got " +
              std::to_string(thetas.size()) + " and " + std::to_string(phis.size()));
  }
}

Circuit GibbsPqc::ancilla_circuit(std::span<const double> thetas) const {
  const int n = config_.model.n_sites;
  const std::size_t per_layer = thetas_per_layer(config_);
  Circuit circuit(n);
  for (int layer = 0; layer < config_.ancilla_layers; ++layer) {
    const auto chunk = thetas.subspan(static_cast<std::size_t>(layer) * per_layer, per_layer);
    GRAngles angles;
    if (config_.ancilla_mode == AncillaMode::ReducedXY) {
      ReducedXYAngles reduced;
      reduced.beta = config_.beta;
      std::copy(chunk.begin(), chunk.end(), reduced.free.begin());
      angles = expand_reduced_clamped(reduced);
    } else {
      angles = GRAngles{n, std::vector<double>(chunk.begin(), chunk.end())};
    }
    circuit.append(gr_circuit(angles));
  }
  return circuit;
}

Circuit GibbsPqc::system_circuit(std::span<const double> phis) const {
  return brickwall_circuit(BrickwallParams{config_.model.n_sites, config_.system_layers,
                                           std::vector<double>(phis.begin(), phis.end())});
}

Statevector GibbsPqc::compose(std::span<const double> thetas, std::span<const double> phis) const {
  check_sizes(thetas, phis);
  const int n = config_.model.n_sites;
  Statevector state(2 * n, config_.limits);
  ancilla_circuit(thetas).apply(state, 0);
  for (int i = 0; i < n; ++i) state.apply_cnot(i, n + i);
  system_circuit(phis).apply(state, n);
  return state;
}

std::vector<double> GibbsPqc::ancilla_distribution(std::span<const double> thetas) const {
  const int n = config_.model.n_sites;
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t per_layer = thetas_per_layer(config_);
  std::vector<double> amp(dim, 0.0);
  amp[0] = 1.0;
  ReducedXYAngles reduced;
  reduced.beta = config_.beta;
  for (int layer = 0; layer < config_.ancilla_layers; ++layer) {
    const auto chunk = thetas.subspan(static_cast<std::size_t>(layer) * per_layer, per_layer);
    std::vector<double> expanded;
    std::span<const double> tree = chunk;
    if (config_.ancilla_mode == AncillaMode::ReducedXY) {
      std::copy(chunk.begin(), chunk.end(), reduced.free.begin());
      expanded = expand_reduced_clamped(reduced).thetas;
      tree = expanded;
    }
    // Level k rotates qubit k conditioned on the k leading qubits equal to l,
    // the same gate order as gr_circuit.
    for (int k = 0; k < n; ++k) {
      const std::size_t stride = std::size_t{1} << (n - 1 - k);
      for (std::size_t l = 0; l < (std::size_t{1} << k); ++l) {
        const double theta = tree[(std::size_t{1} << k) - 1 + l];
        const double c = std::cos(0.5 * theta);
        const double s = std::sin(0.5 * theta);
        const std::size_t base = l << (n - k);
        for (std::size_t j = 0; j < stride; ++j) {
          double& a0 = amp[base + j];
          double& a1 = amp[base + j + stride];
          const double lo = a0;
          a0 = c * lo - s * a1;
          a1 = s * lo + c * a1;
        }
      }
    }
  }
  for (double& a : amp) a *= a;
  return amp;
}

Eigen::MatrixXd GibbsPqc::system_unitary(std::span<const double> phis) const {
  const int n = config_.model.n_sites;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(dim, dim);
  const auto bonds = brickwall_bonds(n);
  std::size_t next = 0;
  Eigen::Matrix<double, 4, Eigen::Dynamic> rows(4, dim);
  for (int layer = 0; layer < config_.system_layers; ++layer) {
    for (const auto& [qa, qb] : bonds) {
      const Eigen::Matrix4d g = rp_matrix(phis[next], phis[next + 1]);
      next += 2;
      const Eigen::Index ma = Eigen::Index{1} << (n - 1 - qa);
      const Eigen::Index mb = Eigen::Index{1} << (n - 1 - qb);
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & (ma | mb)) continue;
        const Eigen::Index idx[4] = {i, i | mb, i | ma, i | ma | mb};
        for (int r = 0; r < 4; ++r) rows.row(r) = u.row(idx[r]);
        rows = (g * rows).eval();
        for (int r = 0; r < 4; ++r) u.row(idx[r]) = rows.row(r);
      }
    }
  }
  return u;
}

double GibbsPqc::free_energy(std::span<const double> thetas, std::span<const double> phis) const {
  check_sizes(thetas, phis);
  const std::vector<double> p = ancilla_distribution(thetas);
  const Eigen::MatrixXd u = system_unitary(phis);
  // Tr(H U diag(p) U^T) = sum_a p_a (U^T H U)_aa
  const Eigen::RowVectorXd diag = u.cwiseProduct(hamiltonian_ * u).colwise().sum();
  double energy = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) energy += p[a] * diag(static_cast<Eigen::Index>(a));
  return energy - von_neumann_entropy(p) / config_.beta;
}

double GibbsPqc::free_energy_full(std::span<const double> thetas,
                                  std::span<const double> phis) const {
  const Statevector state = compose(thetas, phis);
  const int n = config_.model.n_sites;
  const std::vector<int> ancilla = range(0, n);
  const std::vector<int> system = range(n, n);
  return expectation(hamiltonian_, partial_trace(state, system)) -
         von_neumann_entropy(marginal_distribution(state, ancilla)) / config_.beta;
}

double GibbsPqc::free_energy(std::span<const double> packed) const {
  const std::size_t nt = config_.theta_count();
  if (packed.size() != nt + config_.phi_count()) {
    raise(ErrorKind::InvalidArgument, "packed parameter vector has the wrong length");
  }
  return free_energy(packed.first(nt), packed.subspan(nt));
}

PqcEvaluation GibbsPqc::evaluate(std::span<const double> thetas,
                                 std::span<const double> phis) const {
  const Statevector state = compose(thetas, phis);
  const int n = config_.model.n_sites;
  const std::vector<int> ancilla = range(0, n);
  const std::vector<int> system = range(n, n);

  PqcEvaluation out;
  out.system_state = partial_trace(state, system);
  out.ancilla_probabilities = marginal_distribution(state, ancilla);
  out.energy = expectation(hamiltonian_, out.system_state);
  out.entropy = von_neumann_entropy(out.ancilla_probabilities);
  out.free_energy = out.energy - out.entropy / config_.beta;
  out.fidelity = uhlmann_fidelity(out.system_state, target_.density_matrix);
  return out;
}

Statevector compose_pqc(std::span<const double> thetas, std::span<const double> phis,
                        const VqaConfig& config) {
  return GibbsPqc(config).compose(thetas, phis);
}

double free_energy(std::span<const double> thetas, std::span<const double> phis,
                   const VqaConfig& config) {
  return GibbsPqc(config).free_energy(thetas, phis);
}

PqcEvaluation evaluate(std::span<const double> thetas, std::span<const double> phis,
                       const VqaConfig& config) {
  return GibbsPqc(config).evaluate(thetas, phis);
}

double free_energy_of(const DensityMatrix& rho, const Eigen::MatrixXd& hamiltonian, double beta) {
  if (!(beta > 0.0)) raise(ErrorKind::Domain, "free energy needs beta > 0");
  return expectation(hamiltonian, rho) - von_neumann_entropy(rho) / beta;
}

std::pair<std::vector<double>, std::vector<double>> initial_parameters(const VqaConfig& config,
                                                                       int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> full_turn(0.0, kTwoPi);

  std::vector<double> thetas;
  thetas.reserve(config.theta_count());
  if (config.ancilla_mode == AncillaMode::ReducedXY) {
    std::uniform_real_distribution<double> half_turn(0.0, std::numbers::pi);
    auto open_half_turn = [&] {
      double x = 0.0;
      while (x <= 0.0) x = half_turn(rng);
      return x;
    };
    for (int layer = 0; layer < config.ancilla_layers; ++layer) {
      ReducedXYAngles reduced;
      reduced.beta = config.beta;
      while (true) {
        for (double& t : reduced.free) t = open_half_turn();
        try {
          expand_reduced(reduced);
          break;
        } catch (const Error&) {
          // outside the arccos domain: redraw
        }
      }
      thetas.insert(thetas.end(), reduced.free.begin(), reduced.free.end());
    }
  } else {
    for (std::size_t i = 0; i < config.theta_count(); ++i) thetas.push_back(full_turn(rng));
  }

  std::vector<double> phis(config.phi_count());
  for (double& p : phis) p = full_turn(rng);
  return {std::move(thetas), std::move(phis)};
}

RestartRecord run_restart(const GibbsPqc& pqc, std::vector<double> thetas,
                          std::vector<double> phis, int index) {
  const VqaConfig& config = pqc.config();
  const std::size_t nt = thetas.size();
  std::vector<double> x0 = std::move(thetas);
  x0.insert(x0.end(), phis.begin(), phis.end());

  const Objective objective = [&pqc](std::span<const double> x) { return pqc.free_energy(x); };
  MinimizerOptions options;
  options.max_iterations = config.max_iterations;
  options.f_tolerance = config.f_tolerance;
  options.gradient_tolerance = config.gradient_tolerance;
  options.gradient_step = config.gradient_step;

  const MinimizerResult min = config.optimizer == OptimizerKind::DirectSearch
                                  ? minimize_simplex(objective, std::move(x0), options)
                                  : minimize_bfgs(objective, std::move(x0), options);

  RestartRecord record;
  record.index = index;
  record.iterations = min.iterations;
  record.converged = min.converged;
  record.status = min.status;
  record.thetas.assign(min.x.begin(), min.x.begin() + static_cast<std::ptrdiff_t>(nt));
  record.phis.assign(min.x.begin() + static_cast<std::ptrdiff_t>(nt), min.x.end());
  if (std::isfinite(min.value)) {
    const PqcEvaluation eval = pqc.evaluate(record.thetas, record.phis);
    record.free_energy = eval.free_energy;
    record.fidelity = eval.fidelity;
  } else {
    record.free_energy = std::numeric_limits<double>::quiet_NaN();
    record.fidelity = std::numeric_limits<double>::quiet_NaN();
    record.converged = false;
    record.status = "diverged";
  }
  return record;
}

VqaResult optimize(const VqaConfig& config) {
  const GibbsPqc pqc(config);
  std::vector<RestartRecord> records(static_cast<std::size_t>(config.restarts));

  const int jobs = std::clamp(
      config.jobs == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))
                       : config.jobs,
      1, config.restarts);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.restarts; i = next++) {
      auto [thetas, phis] = initial_parameters(config, i);
      records[static_cast<std::size_t>(i)] = run_restart(pqc, std::move(thetas), std::move(phis), i);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  const RestartRecord* best = nullptr;
  const RestartRecord* max_fid = nullptr;
  for (const auto& r : records) {
    if (!std::isfinite(r.free_energy)) continue;
    if (best == nullptr || r.free_energy < best->free_energy) best = &r;
    if (max_fid == nullptr || r.fidelity > max_fid->fidelity) max_fid = &r;
  }
  if (best == nullptr) {
    throw OptimizationError("all " + std::to_string(config.restarts) + " restarts diverged",
                            records);
  }

  VqaResult result;
  result.config = config;
  result.exact_free_energy = pqc.exact_free_energy();
  result.best = *best;
  result.max_fidelity = *max_fid;
  result.prepared_state = pqc.evaluate(best->thetas, best->phis).system_state;
  result.restarts = std::move(records);
  return result;
}

}  // namespace gibbsxy
