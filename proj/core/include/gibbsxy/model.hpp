// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace gibbsxy {

/// Periodic spin-1/2 XY chain with transverse field; the exchange J is 1.
struct ModelParams {
  int n_sites = 4;
  double gamma = 1.0;    // anisotropy: 0 is XX, 1 is Ising
  double field_h = 0.0;  // transverse field

  /// Throws InvalidModel unless n_sites is even and >= 2 and both reals are finite.
  void validate() const;

  /// Anisotropy outside [0, 1] is accepted but flagged.
  bool gamma_out_of_range() const { return gamma < 0.0 || gamma > 1.0; }
};

enum class Parity { Positive, Negative };

const char* to_string(Parity parity) noexcept;

/// Allowed fermion momenta of one parity sector, ascending, in (-pi, pi].
/// The positive sector uses antiperiodic fermion boundary conditions and never
/// contains 0 or pi; the negative sector is periodic and contains both.
struct MomentumSet {
  Parity parity = Parity::Positive;
  std::vector<double> momenta;
};

MomentumSet momenta(Parity parity, int n_sites);

/// Quasiparticle energy sqrt((h - cos k)^2 + gamma^2 sin^2 k).
double single_particle_energy(double k, const ModelParams& params);

}  // namespace gibbsxy
