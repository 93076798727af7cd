// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

// gibbsxy command-line front end.
//
// Exit codes: 0 ok, 1 fidelity below --threshold, 2 usage or invalid input,
// 3 optimization failure, 4 resource cap.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gibbsxy/degeneracy.hpp"
#include "gibbsxy/dense_hamiltonian.hpp"
#include "gibbsxy/error.hpp"
#include "gibbsxy/gibbs.hpp"
#include "gibbsxy/grover_rudolph.hpp"
#include "gibbsxy/reduced_xy.hpp"
#include "gibbsxy/sector_spectrum.hpp"
#include "gibbsxy/serialize.hpp"
#include "gibbsxy/vqa.hpp"
#include "json.hpp"

namespace gx = gibbsxy;

namespace {

enum Exit : int { kOk = 0, kBelowThreshold = 1, kUsage = 2, kOptFailed = 3, kResource = 4 };

int exit_code(gx::ErrorKind kind) {
  switch (kind) {
    case gx::ErrorKind::ResourceLimit:
      return kResource;
    case gx::ErrorKind::OptimizationFailed:
      return kOptFailed;
    default:
      return kUsage;
  }
}

void warn_gamma(const gx::ModelParams& m) {
  if (m.gamma_out_of_range()) {
    std::cerr << "warning: gamma = " << m.gamma << " is outside [0, 1]\n";
  }
}

// --- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  gx::ModelParams model;
  std::string parity = "both";
  std::string format = "table";
};

int run_spectrum(const SpectrumArgs& a, const gx::Limits& limits) {
  a.model.validate();
  warn_gamma(a.model);
  std::vector<gx::SectorSpectrum> sectors;
  if (a.parity != "negative") sectors.push_back(gx::sector_spectrum(gx::Parity::Positive, a.model, limits));
  if (a.parity != "positive") sectors.push_back(gx::sector_spectrum(gx::Parity::Negative, a.model, limits));

  // Cross-check against dense diagonalization when it fits under the cap.
  double residual = std::numeric_limits<double>::quiet_NaN();
  if (a.model.n_sites <= limits.dense_sites) {
    residual = 0.0;
    for (const auto& s : sectors) {
      std::vector<double> analytic = s.energies();
      std::sort(analytic.begin(), analytic.end());
      const Eigen::VectorXd dense = gx::dense_sector_energies(a.model, s.parity, limits);
      for (std::size_t i = 0; i < analytic.size(); ++i) {
        residual = std::max(residual, std::abs(analytic[i] - dense(static_cast<Eigen::Index>(i))));
      }
    }
  }

  if (a.format == "json") {
    std::cout << gx::spectrum_json(sectors, residual);
  } else if (a.format == "csv") {
    std::cout << gx::spectrum_csv_header();
    for (const auto& s : sectors) std::cout << gx::spectrum_csv_rows(s);
  } else {
    std::printf("%-9s %6s %4s %24s\n", "parity", "modes", "exc", "energy");
    for (const auto& s : sectors) {
      for (const auto& level : s.levels) {
        std::printf("%-9s %6llu %4d %24s\n", gx::to_string(s.parity),
                    static_cast<unsigned long long>(level.modes), level.excitations,
                    gx::format_double(level.energy).c_str());
      }
    }
    for (const auto& s : sectors) {
      std::printf("ground[%s] = %s\n", gx::to_string(s.parity),
                  gx::format_double(s.ground_energy).c_str());
    }
    if (std::isnan(residual)) {
      std::printf("dense cross-check skipped (N > %d)\n", limits.dense_sites);
    } else {
      std::printf("dense residual = %s\n", gx::format_double(residual).c_str());
    }
  }
  return kOk;
}

// --- degeneracy -----------------------------------------------------------

struct DegeneracyArgs {
  int n_sites = 4;
  int n_fermions = 0;
  std::string format = "table";
};

int run_degeneracy(const DegeneracyArgs& a) {
  const gx::DegeneracyProfile profile = gx::degeneracy_profile(a.n_sites, a.n_fermions);
  if (a.format == "json") {
    std::cout << gx::degeneracy_json(profile);
  } else if (a.format == "csv") {
    std::cout << gx::degeneracy_csv_header() << gx::degeneracy_csv_rows(profile);
  } else {
    std::string line;
    for (const auto& [degree, count] : profile.counts) {
      if (!line.empty()) line += ", ";
      line += std::to_string(degree) + "-fold: " + std::to_string(count);
    }
    const std::uint64_t total = profile.total_levels();
    const std::uint64_t expect = gx::binomial(a.n_sites, a.n_fermions);
    std::cout << line << ", total " << total << (total == expect ? " = " : " != ") << "C("
              << a.n_sites << "," << a.n_fermions << ")\n";
  }
  return kOk;
}

// --- gr-angles ------------------------------------------------------------

struct AnglesArgs {
  std::vector<double> model;  // N gamma h beta
  std::string distribution;   // path
  std::string format = "table";
  double tolerance = 1e-9;
};

std::vector<double> read_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) gx::raise(gx::ErrorKind::InvalidArgument, "cannot open distribution file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream tokens(text);
  std::vector<double> p;
  std::string tok;
  while (tokens >> tok) {
    if (tok[0] == '#') {
      std::getline(tokens, tok);
      continue;
    }
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      gx::raise(gx::ErrorKind::InvalidArgument, "bad number '" + tok + "' in " + path);
    }
    p.push_back(x);
  }
  if (p.empty()) gx::raise(gx::ErrorKind::InvalidArgument, "distribution file '" + path + "' is empty");
  return p;
}

void print_angles_table(const gx::GRAngles& angles) {
  for (std::size_t i = 0; i < angles.thetas.size(); ++i) {
    std::printf("theta_%-3zu %24s\n", i, gx::format_double(angles.thetas[i]).c_str());
  }
}

int run_gr_angles(const AnglesArgs& a, const gx::Limits& limits) {
  if (a.model.empty() == a.distribution.empty()) {
    gx::raise(gx::ErrorKind::InvalidArgument, "give exactly one of --model or --distribution");
  }
  if (!a.distribution.empty()) {
    const gx::GRAngles angles = gx::angles_from_distribution(read_distribution(a.distribution));
    if (a.format == "json") {
      std::cout << gx::angles_json(angles);
    } else {
      print_angles_table(angles);
    }
    return kOk;
  }

  const double n_raw = a.model[0];
  if (n_raw != std::floor(n_raw)) gx::raise(gx::ErrorKind::InvalidModel, "N must be an integer");
  const gx::ModelParams model{static_cast<int>(n_raw), a.model[1], a.model[2]};
  const double beta = a.model[3];
  model.validate();
  warn_gamma(model);

  if (model.n_sites == 4) {
    const gx::ReducedFitReport report = gx::fit_check_reduced(model, beta, a.tolerance, limits);
    if (a.format == "json") {
      std::cout << gx::reduced_report_json(report);
    } else {
      print_angles_table(report.angles);
      for (const auto& id : report.identities) {
        std::printf("%-40s residual %-24s %s\n", id.name.c_str(),
                    gx::format_double(id.residual).c_str(), id.holds ? "holds" : "FAILS");
      }
      std::printf("reduced reconstruction error %s\n",
                  gx::format_double(report.reconstruction_error).c_str());
    }
    return kOk;
  }

  // Other sizes: angles only, identities are specific to four sites.
  std::vector<double> p = gx::sector_boltzmann_weights(model, beta, limits);
  double z = 0.0;
  for (double x : p) z += x;
  for (double& x : p) x /= z;
  const gx::GRAngles angles = gx::angles_from_distribution(p);
  if (a.format == "json") {
    std::cout << gx::angles_json(angles);
  } else {
    print_angles_table(angles);
  }
  return kOk;
}

// --- gibbs-exact ----------------------------------------------------------

struct GibbsArgs {
  gx::ModelParams model;
  double beta = 1.0;
};

int run_gibbs(const GibbsArgs& a, const gx::Limits& limits) {
  a.model.validate();
  warn_gamma(a.model);
  std::cout << gx::gibbs_json(a.model, gx::gibbs_target(a.model, a.beta, limits));
  return kOk;
}

// --- vqa ------------------------------------------------------------------

struct VqaArgs {
  gx::VqaConfig config;
  std::string ancilla_mode = "full_gr";
  std::string optimizer = "quasi-newton";
  double threshold = 0.98;
  std::string output;
};

void finish_config(gx::VqaConfig& c, const std::string& ancilla, const std::string& optimizer,
                   const gx::Limits& limits) {
  c.ancilla_mode = ancilla == "reduced_xy" ? gx::AncillaMode::ReducedXY : gx::AncillaMode::FullGR;
  c.optimizer = optimizer == "direct-search" ? gx::OptimizerKind::DirectSearch
                                             : gx::OptimizerKind::QuasiNewton;
  c.limits = limits;
  c.validate();
  warn_gamma(c.model);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) gx::raise(gx::ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

void print_log(const std::vector<gx::RestartRecord>& log) {
  for (const auto& r : log) {
    std::cerr << "  restart " << r.index << ": F=" << gx::format_double(r.free_energy)
              << " fidelity=" << gx::format_double(r.fidelity) << " status=" << r.status << "\n";
  }
}

int run_vqa(VqaArgs a, const gx::Limits& limits) {
  finish_config(a.config, a.ancilla_mode, a.optimizer, limits);
  gx::VqaResult result;
  try {
    result = gx::optimize(a.config);
  } catch (const gx::OptimizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_log(e.log());
    return kOptFailed;
  }
  write_output(a.output, gx::vqa_result_json(result));

  int converged = 0;
  for (const auto& r : result.restarts) converged += r.converged ? 1 : 0;
  const double fidelity = result.max_fidelity.fidelity;
  std::cerr << "fidelity (best of " << result.restarts.size() << ") = " << gx::format_double(fidelity)
            << "\nfidelity (lowest F)  = " << gx::format_double(result.fidelity())
            << "\nfree energy: variational " << gx::format_double(result.best_free_energy())
            << ", exact " << gx::format_double(result.exact_free_energy)
            << "\nconverged restarts: " << converged << "/" << result.restarts.size() << "\n";
  return fidelity >= a.threshold ? kOk : kBelowThreshold;
}

// --- sweep ----------------------------------------------------------------

struct SweepArgs {
  VqaArgs point;
  std::vector<double> betas;
  double beta_min = 0.1;
  double beta_max = 10.0;
  int beta_points = 8;
  std::vector<double> gammas{0.0, 0.5, 1.0};
  std::vector<double> fields{0.5, 1.0, 1.5};
  std::string format = "csv";
  int jobs = 1;
};

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi >= lo) || n < 1) {
    gx::raise(gx::ErrorKind::InvalidArgument, "beta range needs 0 < min <= max and >= 1 point");
  }
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    out.push_back(i == n - 1 ? hi : lo * std::pow(hi / lo, t));
  }
  return out;
}

struct SweepRow {
  double beta = 0.0, gamma = 0.0, field = 0.0;
  std::optional<gx::VqaResult> result;
  std::string status = "ok";
  double wall_time = 0.0;
};

int run_sweep(SweepArgs a, const gx::Limits& limits) {
  if (a.betas.empty()) a.betas = log_grid(a.beta_min, a.beta_max, a.beta_points);
  if (a.gammas.empty() || a.fields.empty()) {
    gx::raise(gx::ErrorKind::InvalidArgument, "gamma and h grids must be non-empty");
  }
  for (double b : a.betas) {
    if (!(b > 0.0)) gx::raise(gx::ErrorKind::Domain, "every beta must be > 0");
  }
  gx::VqaConfig base = a.point.config;
  base.jobs = 1;  // parallelism is across grid points
  finish_config(base, a.point.ancilla_mode, a.point.optimizer, limits);

  // Grid order: gamma, then h, then beta.
  std::vector<SweepRow> rows;
  for (double g : a.gammas) {
    for (double h : a.fields) {
      for (double b : a.betas) rows.push_back({b, g, h, std::nullopt, "ok", 0.0});
    }
  }
  for (const auto& row : rows) {
    gx::VqaConfig c = base;
    c.model.gamma = row.gamma;
    c.model.field_h = row.field;
    c.beta = row.beta;
    c.validate();
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      SweepRow& row = rows[i];
      gx::VqaConfig c = base;
      c.model.gamma = row.gamma;
      c.model.field_h = row.field;
      c.beta = row.beta;
      const auto start = std::chrono::steady_clock::now();
      try {
        row.result = gx::optimize(c);
      } catch (const gx::Error& e) {
        row.status = std::string("failed: ") + gx::to_string(e.kind());
      }
      row.wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int jobs = std::clamp(a.jobs == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : a.jobs,
                              1, static_cast<int>(rows.size()));
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  int failures = 0;
  std::string text;
  if (a.format == "json") {
    // Timing is left out so identical flags give identical bytes.
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json p{{"beta", row.beta}, {"gamma", row.gamma}, {"h", row.field},
                               {"status", row.status}};
      if (row.result) {
        p["result"] = nlohmann::ordered_json::parse(gx::vqa_result_json(*row.result));
      } else {
        ++failures;
      }
      points.push_back(std::move(p));
    }
    text = points.dump(2) + "\n";
  } else {
    text = "beta,gamma,h,fidelity_best,free_energy_best,exact_free_energy,restarts,wall_time,status\n";
    for (const auto& row : rows) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      const double fid = row.result ? row.result->max_fidelity.fidelity : nan;
      const double f = row.result ? row.result->best_free_energy() : nan;
      const double exact = row.result ? row.result->exact_free_energy : nan;
      failures += row.result ? 0 : 1;
      text += gx::format_double(row.beta) + ',' + gx::format_double(row.gamma) + ',' +
              gx::format_double(row.field) + ',' + gx::format_double(fid) + ',' +
              gx::format_double(f) + ',' + gx::format_double(exact) + ',' +
              std::to_string(base.restarts) + ',' + gx::format_double(row.wall_time) + ',' +
              row.status + '\n';
    }
  }
  write_output(a.point.output, text);
  if (failures > 0) std::cerr << failures << " of " << rows.size() << " points failed\n";
  return failures > 0 ? kOptFailed : kOk;
}

void add_model_flags(CLI::App* cmd, gx::ModelParams& m) {
  cmd->add_option("-N,--sites", m.n_sites, "chain length (even)")->required();
  cmd->add_option("-g,--gamma", m.gamma, "anisotropy")->default_val(m.gamma);
  cmd->add_option("-h,--field", m.field_h, "transverse field")->default_val(m.field_h);
}

void add_vqa_flags(CLI::App* cmd, VqaArgs& a, bool single_point) {
  gx::VqaConfig& c = a.config;
  cmd->add_option("-N,--sites", c.model.n_sites, "chain length (even)")->default_val(4);
  if (single_point) {
    cmd->add_option("-g,--gamma", c.model.gamma, "anisotropy")->default_val(1.0);
    cmd->add_option("-h,--field", c.model.field_h, "transverse field")->default_val(0.5);
    cmd->add_option("-b,--beta", c.beta, "inverse temperature")->default_val(1.0);
    cmd->add_option("--threshold", a.threshold, "exit 1 when the best fidelity is below this")
        ->default_val(0.98);
  }
  cmd->add_option("--layers", c.system_layers, "brick-wall layers on the system")->default_val(3);
  cmd->add_option("--ancilla-layers", c.ancilla_layers, "loader repetitions on the ancillas")
      ->default_val(1);
  cmd->add_option("--restarts", c.restarts, "random restarts per point")->default_val(20);
  cmd->add_option("--ancilla-mode", a.ancilla_mode, "full_gr or reduced_xy")
      ->check(CLI::IsMember({"full_gr", "reduced_xy"}))
      ->default_val("full_gr");
  cmd->add_option("--optimizer", a.optimizer, "quasi-newton or direct-search")
      ->check(CLI::IsMember({"quasi-newton", "direct-search"}))
      ->default_val("quasi-newton");
  cmd->add_option("--max-iterations", c.max_iterations)->default_val(c.max_iterations);
  cmd->add_option("--gradient-step", c.gradient_step)->default_val(c.gradient_step);
  cmd->add_option("--f-tolerance", c.f_tolerance)->default_val(c.f_tolerance);
  cmd->add_option("--gradient-tolerance", c.gradient_tolerance)->default_val(c.gradient_tolerance);
  cmd->add_option("--seed", c.seed, "base seed; restart i uses (seed, i)")->default_val(0);
  cmd->add_option("-o,--output", a.output, "write to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra and variational Gibbs-state preparation for the periodic XY chain"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  gx::Limits limits;
  try {
    limits = gx::Limits::from_env();
  } catch (const gx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  SpectrumArgs spectrum;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "both parity-sector spectra with a dense cross-check");
  add_model_flags(cmd_spectrum, spectrum.model);
  cmd_spectrum->add_option("--parity", spectrum.parity)
      ->check(CLI::IsMember({"both", "positive", "negative"}))
      ->default_val("both");
  cmd_spectrum->add_option("--format", spectrum.format)
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->default_val("table");

  DegeneracyArgs degeneracy;
  auto* cmd_degeneracy = app.add_subcommand("degeneracy", "4^j-fold degeneracy profile at fixed fermion number");
  cmd_degeneracy->add_option("-N,--sites", degeneracy.n_sites)->required();
  cmd_degeneracy->add_option("-n,--fermions", degeneracy.n_fermions)->required();
  cmd_degeneracy->add_option("--format", degeneracy.format)
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->default_val("table");

  AnglesArgs angles;
  auto* cmd_angles = app.add_subcommand("gr-angles", "Grover-Rudolph angles of a distribution or a thermal model");
  auto* model_opt = cmd_angles->add_option("--model", angles.model, "N gamma h beta")->expected(4);
  auto* dist_opt = cmd_angles->add_option("--distribution", angles.distribution,
                                          "file of probabilities (whitespace or comma separated)");
  model_opt->excludes(dist_opt);
  cmd_angles->add_option("--tolerance", angles.tolerance)->default_val(angles.tolerance);
  cmd_angles->add_option("--format", angles.format)
      ->check(CLI::IsMember({"table", "json"}))
      ->default_val("table");

  GibbsArgs gibbs;
  auto* cmd_gibbs = app.add_subcommand("gibbs-exact", "exact Gibbs weights and free energy as JSON");
  add_model_flags(cmd_gibbs, gibbs.model);
  cmd_gibbs->add_option("-b,--beta", gibbs.beta)->required();

  VqaArgs vqa;
  auto* cmd_vqa = app.add_subcommand("vqa", "variational free-energy minimization at one point");
  add_vqa_flags(cmd_vqa, vqa, true);
  cmd_vqa->add_option("--jobs", vqa.config.jobs, "restart worker threads (0 = all cores)")->default_val(1);

  SweepArgs sweep;
  auto* cmd_sweep = app.add_subcommand("sweep", "VQA over a (gamma, h, beta) grid");
  add_vqa_flags(cmd_sweep, sweep.point, false);
  cmd_sweep->add_option("--betas", sweep.betas, "explicit beta list (overrides the range)");
  cmd_sweep->add_option("--beta-min", sweep.beta_min)->default_val(sweep.beta_min);
  cmd_sweep->add_option("--beta-max", sweep.beta_max)->default_val(sweep.beta_max);
  cmd_sweep->add_option("--beta-points", sweep.beta_points)->default_val(sweep.beta_points);
  cmd_sweep->add_option("--gammas", sweep.gammas)->default_str("0 0.5 1");
  cmd_sweep->add_option("--fields", sweep.fields)->default_str("0.5 1 1.5");
  cmd_sweep->add_option("--format", sweep.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_val("csv");
  cmd_sweep->add_option("--jobs", sweep.jobs, "grid points in flight (0 = all cores)")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmd_spectrum) return run_spectrum(spectrum, limits);
    if (*cmd_degeneracy) return run_degeneracy(degeneracy);
    if (*cmd_angles) return run_gr_angles(angles, limits);
    if (*cmd_gibbs) return run_gibbs(gibbs, limits);
    if (*cmd_vqa) return run_vqa(vqa, limits);
    if (*cmd_sweep) return run_sweep(sweep, limits);
  } catch (const gx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kUsage;
}
