// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gibbsxy/error.hpp"

namespace gibbsxy {

namespace {

void check_sites(int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0) {
    raise(ErrorKind::InvalidModel,
          "n_sites must be even and >= 2 (got " + std::to_string(n_sites) + ")");
  }
}

}  // namespace

void ModelParams::validate() const {
  check_sites(n_sites);
  if (!std::isfinite(gamma) || !std::isfinite(field_h)) {
    raise(ErrorKind::InvalidModel, "gamma and field_h must be finite");
  }
}

const char* to_string(Parity parity) noexcept {
  return parity == Parity::Positive ? "positive" : "negative";
}

MomentumSet momenta(Parity parity, int n_sites) {
  check_sites(n_sites);
  MomentumSet set{parity, {}};
  set.momenta.reserve(static_cast<std::size_t>(n_sites));
  // Integer numerators keep k and -k exact negatives of each other.
  for (int m = 0; m < n_sites; ++m) {
    const int numerator = parity == Parity::Positive ? 2 * m - (n_sites - 1)
                                                     : 2 * (m + 1) - n_sites;
    set.momenta.push_back(std::numbers::pi *
                          (static_cast<double>(numerator) / n_sites));
  }
  return set;
}

double single_particle_energy(double k, const ModelParams& params) {
  const double c = params.field_h - std::cos(k);
  const double s = params.gamma * std::sin(k);
  return std::sqrt(c * c + s * s);
}

}  // namespace gibbsxy
