// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/sector_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

namespace {

bool is_zero_mode(double k) { return k == 0.0; }
bool is_pi_mode(double k) { return k == std::numbers::pi; }

std::vector<int> canonical_mode_order(const MomentumSet& set) {
  const auto& ks = set.momenta;
  std::vector<int> order;
  order.reserve(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (is_zero_mode(ks[i])) order.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (is_pi_mode(ks[i])) order.push_back(static_cast<int>(i));

  // Momenta are ascending and symmetric, so the i-th positive momentum pairs
  // with its mirror at n - 1 - i (positive sector) or n - 2 - i (negative
  // sector, where pi has no partner).
  std::vector<int> positive;
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i] > 0.0 && !is_pi_mode(ks[i])) positive.push_back(static_cast<int>(i));
  for (int plus : positive) {
    const double k = ks[static_cast<std::size_t>(plus)];
    auto it = std::find(ks.begin(), ks.end(), -k);
    order.push_back(static_cast<int>(it - ks.begin()));
    order.push_back(plus);
  }
  return order;
}

// Calls visit(positions) for every r-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_combination(int n, int r, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<double> SectorSpectrum::energies() const {
  std::vector<double> out;
  out.reserve(levels.size());
  for (const auto& level : levels) out.push_back(level.energy);
  return out;
}

SectorSpectrum sector_spectrum(Parity parity, const ModelParams& params,
                               const Limits& limits) {
  params.validate();
  if (params.n_sites > limits.analytic_sites) {
    raise(ErrorKind::ResourceLimit,
          "analytic spectrum limited to n_sites <= " +
              std::to_string(limits.analytic_sites) + " (got " +
              std::to_string(params.n_sites) + ")");
  }

  SectorSpectrum out;
  out.parity = parity;
  out.momenta = momenta(parity, params.n_sites);
  out.mode_order = canonical_mode_order(out.momenta);

  const auto& ks = out.momenta.momenta;
  const int n = params.n_sites;
  out.mode_energies.resize(ks.size());
  double reference = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double k = ks[i];
    double e = 0.0;
    if (is_zero_mode(k)) {
      e = -(params.field_h - 1.0);  // occupied in the reference: s(0) = -1
    } else if (is_pi_mode(k)) {
      e = params.field_h + 1.0;
    } else {
      e = single_particle_energy(k, params);
    }
    out.mode_energies[i] = e;
    reference -= 0.5 * e;
  }
  out.reference_energy = reference;

  out.levels.reserve(std::size_t{1} << (n - 1));
  for (int r = 0; r <= n; r += 2) {
    for_each_combination(n, r, [&](const std::vector<int>& positions) {
      SectorLevel level;
      level.energy = reference;
      for (int pos : positions) {
        const int mode = out.mode_order[static_cast<std::size_t>(pos)];
        level.energy += out.mode_energies[static_cast<std::size_t>(mode)];
        level.modes |= std::uint64_t{1} << mode;
      }
      level.excitations = r;
      out.levels.push_back(level);
    });
  }

  out.ground_energy = out.levels.front().energy;
  for (const auto& level : out.levels)
    out.ground_energy = std::min(out.ground_energy, level.energy);
  return out;
}

std::vector<double> sector_boltzmann_weights(const ModelParams& params, double beta,
                                             const Limits& limits) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    raise(ErrorKind::Domain, "beta must be finite and non-negative");
  }
  const auto pos = sector_spectrum(Parity::Positive, params, limits);
  const auto neg = sector_spectrum(Parity::Negative, params, limits);

  std::vector<double> energies = pos.energies();
  const auto neg_energies = neg.energies();
  energies.insert(energies.end(), neg_energies.begin(), neg_energies.end());

  const double e_min = std::min(pos.ground_energy, neg.ground_energy);
  std::vector<double> weights(energies.size());
  double total = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    weights[i] = std::exp(-beta * (energies[i] - e_min));
    total += weights[i];
  }
  for (double& w : weights) w /= total;
  return weights;
}

}  // namespace gibbsxy
