// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include "gibbsxy/reduced_xy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gibbsxy/error.hpp"
#include "gibbsxy/sector_spectrum.hpp"

namespace gibbsxy {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kBoundarySlack = 1e-12;

double theta4_argument(double theta1, double theta3) {
  return std::sin(0.5 * theta3) / std::tan(0.5 * theta1);
}

GRAngles expand_with(const ReducedXYAngles& r, double theta4) {
  GRAngles full = GRAngles::zeros(4);
  auto& t = full.thetas;
  for (std::size_t i = 0; i < r.free.size(); ++i) {
    t[static_cast<std::size_t>(ReducedXYAngles::kFreeIndices[i])] = r.free[i];
  }
  const double boundary = 2.0 * std::atan(std::exp(-r.beta));
  t[4] = theta4;
  t[8] = t[9] = t[12] = t[13] = kHalfPi;
  t[10] = t[7];
  t[11] = t[14] = boundary;
  return full;
}

}  // namespace

ReducedXYAngles ReducedXYAngles::from_full(const GRAngles& full, double beta) {
  full.validate();
  if (full.n_qubits != 4) raise(ErrorKind::InvalidArgument, "reduced XY angles need a 4-qubit loader");
  ReducedXYAngles r;
  r.beta = beta;
  for (std::size_t i = 0; i < r.free.size(); ++i) {
    r.free[i] = full.thetas[static_cast<std::size_t>(kFreeIndices[i])];
  }
  return r;
}

GRAngles expand_reduced(const ReducedXYAngles& reduced) {
  const double theta1 = reduced.free[1];
  const double theta3 = reduced.free[3];
  const double arg = theta4_argument(theta1, theta3);
  if (!std::isfinite(arg) || std::abs(arg) > 1.0 + kBoundarySlack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "theta_4 undefined: |sin(theta_3/2)/tan(theta_1/2)| > 1 at theta_1 = " << theta1
        << ", theta_3 = " << theta3;
    raise(ErrorKind::Domain, msg.str());
  }
  return expand_with(reduced, 2.0 * std::acos(std::clamp(arg, -1.0, 1.0)));
}

GRAngles expand_reduced_clamped(const ReducedXYAngles& reduced) noexcept {
  double arg = theta4_argument(reduced.free[1], reduced.free[3]);
  if (std::isnan(arg)) arg = 1.0;
  return expand_with(reduced, 2.0 * std::acos(std::clamp(arg, -1.0, 1.0)));
}

bool ReducedFitReport::all_hold() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityCheck& c) { return c.holds; }) &&
         reconstruction_error <= tolerance;
}

ReducedFitReport fit_check_reduced(const ModelParams& params, double beta, double tolerance,
                                   const Limits& limits) {
  params.validate();
  if (params.n_sites != 4) {
    raise(ErrorKind::InvalidModel, "the reduced XY ansatz is defined for n_sites = 4 only");
  }
  ReducedFitReport report;
  report.model = params;
  report.beta = beta;
  report.tolerance = tolerance;
  report.distribution = sector_boltzmann_weights(params, beta, limits);
  report.angles = angles_from_distribution(report.distribution);

  const auto& t = report.angles.thetas;
  const double boundary = 2.0 * std::atan(std::exp(-beta));
  const double arg = std::clamp(theta4_argument(t[1], t[3]), -1.0, 1.0);
  const std::array<std::pair<const char*, double>, 8> residuals = {{
      {"theta_8 = pi/2", std::abs(t[8] - kHalfPi)},
      {"theta_9 = pi/2", std::abs(t[9] - kHalfPi)},
      {"theta_12 = pi/2", std::abs(t[12] - kHalfPi)},
      {"theta_13 = pi/2", std::abs(t[13] - kHalfPi)},
      {"theta_10 = theta_7", std::abs(t[10] - t[7])},
      {"theta_11 = 2 atan(exp(-beta))", std::abs(t[11] - boundary)},
      {"theta_14 = 2 atan(exp(-beta))", std::abs(t[14] - boundary)},
      {"theta_4 = 2 acos(sin(theta_3/2)/tan(theta_1/2))", std::abs(t[4] - 2.0 * std::acos(arg))},
  }};
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    report.identities[i] = {residuals[i].first, residuals[i].second, residuals[i].second <= tolerance};
  }

  const auto simulated = gr_distribution(expand_reduced(ReducedXYAngles::from_full(report.angles, beta)));
  for (std::size_t i = 0; i < simulated.size(); ++i) {
    report.reconstruction_error =
        std::max(report.reconstruction_error, std::abs(simulated[i] - report.distribution[i]));
  }
  return report;
}

}  // namespace gibbsxy
