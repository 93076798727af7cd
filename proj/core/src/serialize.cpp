// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace gibbsxy {

namespace {

using nlohmann::ordered_json;

// nlohmann writes non-finite numbers as null; keep them readable instead.
ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

ordered_json numbers(std::span<const double> xs) {
  ordered_json arr = ordered_json::array();
  for (double x : xs) arr.push_back(number(x));
  return arr;
}

ordered_json numbers(const Eigen::VectorXd& xs) {
  return numbers(std::span<const double>(xs.data(), static_cast<std::size_t>(xs.size())));
}

ordered_json model_json(const ModelParams& m) {
  return {{"n_sites", m.n_sites}, {"gamma", number(m.gamma)}, {"h", number(m.field_h)}};
}

ordered_json sector_json(const SectorSpectrum& s) {
  ordered_json levels = ordered_json::array();
  for (const auto& level : s.levels) {
    levels.push_back({{"modes", level.modes},
                      {"excitations", level.excitations},
                      {"energy", number(level.energy)}});
  }
  return {{"parity", to_string(s.parity)},
          {"momenta", numbers(s.momenta.momenta)},
          {"mode_energies", numbers(s.mode_energies)},
          {"ground_energy", number(s.ground_energy)},
          {"levels", std::move(levels)}};
}

ordered_json restart_json(const RestartRecord& r) {
  return {{"index", r.index},
          {"free_energy", number(r.free_energy)},
          {"fidelity", number(r.fidelity)},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"status", r.status},
          {"thetas", numbers(r.thetas)},
          {"phis", numbers(r.phis)}};
}

ordered_json config_json(const VqaConfig& c) {
  return {{"model", model_json(c.model)},
          {"beta", number(c.beta)},
          {"ancilla_mode", to_string(c.ancilla_mode)},
          {"ancilla_layers", c.ancilla_layers},
          {"system_layers", c.system_layers},
          {"restarts", c.restarts},
          {"optimizer", to_string(c.optimizer)},
          {"max_iterations", c.max_iterations},
          {"gradient_step", number(c.gradient_step)},
          {"f_tolerance", number(c.f_tolerance)},
          {"gradient_tolerance", number(c.gradient_tolerance)},
          {"seed", c.seed}};
  // jobs is left out on purpose: output must not depend on it.
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string spectrum_csv_header() { return "parity,modes,energy\n"; }

std::string spectrum_csv_rows(const SectorSpectrum& spectrum) {
  std::string out;
  for (const auto& level : spectrum.levels) {
    out += to_string(spectrum.parity);
    out += ',' + std::to_string(level.modes) + ',' + format_double(level.energy) + '\n';
  }
  return out;
}

std::string spectrum_json(std::span<const SectorSpectrum> sectors, double dense_residual) {
  ordered_json j;
  if (!sectors.empty()) {
    // momenta(...).size() == n_sites
    j["n_sites"] = sectors.front().momenta.momenta.size();
  }
  ordered_json arr = ordered_json::array();
  for (const auto& s : sectors) arr.push_back(sector_json(s));
  j["sectors"] = std::move(arr);
  j["dense_residual"] = number(dense_residual);
  return dump(j);
}

std::string degeneracy_csv_header() { return "n_sites,n_fermions,degree,count\n"; }

std::string degeneracy_csv_rows(const DegeneracyProfile& profile) {
  std::string out;
  for (const auto& [degree, count] : profile.counts) {
    out += std::to_string(profile.n_sites) + ',' + std::to_string(profile.n_fermions) + ',' +
           std::to_string(degree) + ',' + std::to_string(count) + '\n';
  }
  return out;
}

std::string degeneracy_json(const DegeneracyProfile& profile) {
  ordered_json rows = ordered_json::array();
  for (const auto& [degree, count] : profile.counts) {
    rows.push_back({{"degree", degree}, {"count", count}});
  }
  return dump({{"n_sites", profile.n_sites},
               {"n_fermions", profile.n_fermions},
               {"levels", std::move(rows)},
               {"total", profile.total_levels()},
               {"binomial", binomial(profile.n_sites, profile.n_fermions)}});
}

namespace {

ordered_json angles_object(const GRAngles& angles) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < angles.thetas.size(); ++i) {
    arr.push_back({{"label", "theta_" + std::to_string(i)}, {"value", number(angles.thetas[i])}});
  }
  return {{"n_qubits", angles.n_qubits}, {"angles", std::move(arr)}};
}

}  // namespace

std::string angles_json(const GRAngles& angles) { return dump(angles_object(angles)); }

std::string reduced_report_json(const ReducedFitReport& report) {
  ordered_json ids = ordered_json::array();
  for (const auto& id : report.identities) {
    ids.push_back({{"identity", id.name}, {"residual", number(id.residual)}, {"holds", id.holds}});
  }
  ordered_json j = angles_object(report.angles);
  j["model"] = model_json(report.model);
  j["beta"] = number(report.beta);
  j["distribution"] = numbers(report.distribution);
  j["identities"] = std::move(ids);
  j["reconstruction_error"] = number(report.reconstruction_error);
  j["tolerance"] = number(report.tolerance);
  j["all_hold"] = report.all_hold();
  return dump(j);
}

std::string statevector_json(const Statevector& state) {
  ordered_json arr = ordered_json::array();
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    arr.push_back({{"index", i}, {"re", amps[i].real()}, {"im", amps[i].imag()}});
  }
  return dump(arr);
}

std::string gibbs_json(const ModelParams& model, const GibbsTarget& target) {
  return dump({{"model", model_json(model)},
               {"beta", number(target.beta)},
               {"log_partition_function", number(target.log_partition_function)},
               {"free_energy", target.beta > 0 ? number(target.free_energy()) : ordered_json()},
               {"energies", numbers(target.energies)},
               {"probabilities", numbers(target.probabilities)}});
}

std::string vqa_config_json(const VqaConfig& config) { return dump(config_json(config)); }

std::string vqa_result_json(const VqaResult& result) {
  ordered_json log = ordered_json::array();
  for (const auto& r : result.restarts) log.push_back(restart_json(r));
  return dump({{"config", config_json(result.config)},
               {"exact_free_energy", number(result.exact_free_energy)},
               {"best_free_energy", number(result.best_free_energy())},
               {"fidelity", number(result.fidelity())},
               {"max_fidelity", number(result.max_fidelity.fidelity)},
               {"best", restart_json(result.best)},
               {"max_fidelity_restart", result.max_fidelity.index},
               {"restarts", std::move(log)}});
}

}  // namespace gibbsxy
