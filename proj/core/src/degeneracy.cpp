// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/degeneracy.hpp"

#include <algorithm>
#include <string>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: result * (n - k + i) is divisible by i.
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t DegeneracyProfile::total_levels() const {
  std::uint64_t total = 0;
  for (const auto& [degree, count] : counts) total += degree * count;
  return total;
}

DegeneracyProfile degeneracy_profile(int n_sites, int n_fermions) {
  if (n_sites < 2 || n_sites % 2 != 0) {
    raise(ErrorKind::InvalidModel, "n_sites must be even and >= 2 (got " + std::to_string(n_sites) + ")");
  }
  if (n_sites > 60) raise(ErrorKind::ResourceLimit, "degeneracy counts overflow beyond n_sites = 60");
  if (n_fermions < 0 || n_fermions > n_sites) {
    raise(ErrorKind::UnsupportedSector, "n_fermions must lie in [0, n_sites]");
  }
  if (n_fermions % 2 != 0) {
    raise(ErrorKind::UnsupportedSector,
          "degeneracy profile is defined for even fermion numbers only (got " +
              std::to_string(n_fermions) + ")");
  }

  DegeneracyProfile profile{n_sites, n_fermions, {}};
  const int pairs = n_sites / 2;
  const int half = n_fermions / 2;
  std::uint64_t degree = 1;
  for (int j = 0; j <= half; ++j, degree *= 4) {
    const int full_pairs = half - j;
    const std::uint64_t count = binomial(pairs, full_pairs) * binomial(pairs - full_pairs, 2 * j);
    if (count > 0) profile.counts[degree] = count;
  }
  return profile;
}

std::vector<LevelGroup> group_degenerate(std::span<const double> values, double tol) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<LevelGroup> groups;
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > tol) {
      if (!groups.empty()) groups.back().energy = sum / groups.back().multiplicity;
      groups.push_back({sorted[i], 0});
      sum = 0.0;
    }
    ++groups.back().multiplicity;
    sum += sorted[i];
  }
  if (!groups.empty()) groups.back().energy = sum / groups.back().multiplicity;
  return groups;
}

}  // namespace gibbsxy
