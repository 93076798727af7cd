// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "gibbsxy/limits.hpp"
#include "gibbsxy/model.hpp"

namespace gibbsxy {

/// One many-body level of a parity sector, labelled by the set of modes
/// excited relative to the sector reference state. The negative-sector
/// reference has the k = 0 mode occupied and k = pi empty; the positive
/// reference is the quasiparticle vacuum. Excitation sets are always even.
struct SectorLevel {
  double energy = 0.0;
  std::uint64_t modes = 0;  // bit i <-> momenta[i] of the ascending MomentumSet
  int excitations = 0;      // popcount(modes)
};

struct SectorSpectrum {
  Parity parity = Parity::Positive;
  MomentumSet momenta;
  /// Canonical enumeration order of the modes, as indices into momenta:
  /// unpaired modes (0, then pi) first, then each (-k, +k) pair by |k|.
  std::vector<int> mode_order;
  /// Signed excitation energy of each mode, indexed like momenta.
  std::vector<double> mode_energies;
  /// 2^(N-1) levels; subsets of mode_order in graded-lexicographic order
  /// (by excitation count, then lexicographic in canonical positions).
  std::vector<SectorLevel> levels;
  double reference_energy = 0.0;
  double ground_energy = 0.0;  // min over levels

  std::vector<double> energies() const;
};

/// Analytic free-fermion spectrum of one parity sector.
///
/// Positive sector: E = -1/2 sum_k eps_k + sum_{k in S} eps_k.
/// Negative sector: paired modes contribute eps_k as above; the unpaired modes
/// carry the signed energy h - cos k, with the k = 0 mode occupied in the
/// reference state, so exciting it contributes -(h - 1) and exciting pi
/// contributes +(h + 1). This reproduces dense diagonalization for every h.
///
/// Throws ResourceLimit when n_sites exceeds limits.analytic_sites.
SectorSpectrum sector_spectrum(Parity parity, const ModelParams& params,
                               const Limits& limits = {});

/// Both sectors' Boltzmann weights laid out positive levels first, then
/// negative, each in enumeration order: the basis-to-energy assignment used by
/// the reduced Grover-Rudolph ansatz. Length 2^N, sums to 1.
std::vector<double> sector_boltzmann_weights(const ModelParams& params, double beta,
                                             const Limits& limits = {});

}  // namespace gibbsxy
