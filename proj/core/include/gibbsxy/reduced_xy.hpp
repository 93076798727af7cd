// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "gibbsxy/grover_rudolph.hpp"
#include "gibbsxy/limits.hpp"
#include "gibbsxy/model.hpp"

namespace gibbsxy {

/// Symmetry-reduced Grover-Rudolph parameters for the four-site XY chain.
///
/// The degeneracies of the N = 4 spectrum fix eight of the fifteen loader
/// angles once the Boltzmann weights are laid out positive sector first:
///   theta_8 = theta_9 = theta_12 = theta_13 = pi/2,
///   theta_10 = theta_7,
///   theta_11 = theta_14 = 2 arctan(exp(-beta)),
///   theta_4 = 2 arccos(sin(theta_3 / 2) / tan(theta_1 / 2)).
/// Only N = 4 is supported; the reduction is not derived for other sizes.
struct ReducedXYAngles {
  static constexpr std::array<int, 7> kFreeIndices = {0, 1, 2, 3, 5, 6, 7};

  double beta = 0.0;
  std::array<double, 7> free{};  // theta_0, 1, 2, 3, 5, 6, 7

  /// Picks the free entries out of a full 15-angle vector.
  static ReducedXYAngles from_full(const GRAngles& full, double beta);
};

/// Full 15-angle expansion. Throws Domain, naming theta_1 and theta_3, when
/// |sin(theta_3/2) / tan(theta_1/2)| > 1 or tan(theta_1/2) = 0.
GRAngles expand_reduced(const ReducedXYAngles& reduced);

/// Same expansion with the arccos argument clamped into [-1, 1], so every
/// input maps to some valid loader. Agrees with expand_reduced on its domain.
GRAngles expand_reduced_clamped(const ReducedXYAngles& reduced) noexcept;

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  bool holds = false;
};

struct ReducedFitReport {
  ModelParams model;
  double beta = 0.0;
  std::vector<double> distribution;  // exact weights, positive sector first
  GRAngles angles;                   // angles_from_distribution(distribution)
  std::array<IdentityCheck, 8> identities;
  /// max |p_sim - p_exact| after reducing, expanding and simulating.
  double reconstruction_error = 0.0;
  double tolerance = 0.0;

  bool all_hold() const;
};

/// Checks the eight reduction identities against the exact Boltzmann
/// distribution. Requires n_sites = 4 (InvalidModel otherwise).
ReducedFitReport fit_check_reduced(const ModelParams& params, double beta,
                                   double tolerance = 1e-9, const Limits& limits = {});

}  // namespace gibbsxy
