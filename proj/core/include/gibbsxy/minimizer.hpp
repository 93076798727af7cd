// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gibbsxy {

using Objective = std::function<double(std::span<const double>)>;

struct MinimizerOptions {
  int max_iterations = 2000;
  double f_tolerance = 1e-10;         // stop when |f_k - f_{k-1}| < f_tolerance
  double gradient_tolerance = 1e-8;   // stop when ||g||_inf < gradient_tolerance
  double gradient_step = 1e-6;        // central-difference step
  double first_step = 0.01;           // BFGS initial trial step
  double line_search_tolerance = 0.1;
  double simplex_step = 0.5;          // initial simplex edge
  double simplex_size_tolerance = 1e-8;
};

struct MinimizerResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string status;
};

/// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h.
std::vector<double> central_difference_gradient(const Objective& f, std::span<const double> x,
                                                double step);

/// Quasi-Newton (BFGS) with finite-difference gradients.
MinimizerResult minimize_bfgs(const Objective& f, std::vector<double> x0,
                              const MinimizerOptions& options = {});

/// Derivative-free Nelder-Mead simplex search.
MinimizerResult minimize_simplex(const Objective& f, std::vector<double> x0,
                                 const MinimizerOptions& options = {});

}  // namespace gibbsxy
