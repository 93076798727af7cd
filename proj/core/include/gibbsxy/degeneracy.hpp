// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace gibbsxy {

/// Number of distinct levels of each degeneracy degree 4^j among the
/// C(N, n) n-fermion levels of the positive parity sector.
struct DegeneracyProfile {
  int n_sites = 0;
  int n_fermions = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // degree -> distinct levels

  /// sum over degrees of degree * count; equals C(N, n).
  std::uint64_t total_levels() const;
};

/// counts[4^j] = C(N/2, n/2 - j) C(N/2 - (n/2 - j), 2j), zero entries omitted.
/// Throws InvalidModel for odd/non-positive N and UnsupportedSector for odd n
/// or n outside [0, N].
DegeneracyProfile degeneracy_profile(int n_sites, int n_fermions);

std::uint64_t binomial(int n, int k);

struct LevelGroup {
  double energy = 0.0;  // mean of the group
  int multiplicity = 0;
};

/// Sorts values and merges neighbours closer than tol into one group.
std::vector<LevelGroup> group_degenerate(std::span<const double> values, double tol = 1e-8);

}  // namespace gibbsxy
