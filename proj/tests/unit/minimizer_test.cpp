// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "gibbsxy/error.hpp"
#include "gibbsxy/minimizer.hpp"

namespace gibbsxy {
namespace {

double rosenbrock(std::span<const double> x) {
  return std::pow(1 - x[0], 2) + 100 * std::pow(x[1] - x[0] * x[0], 2);
}

TEST(CentralDifference, Quadratic) {
  const Objective f = [](std::span<const double> x) { return 3 * x[0] * x[0] + x[0] * x[1] - x[1]; };
  const std::vector<double> x = {0.7, -1.2};
  const auto g = central_difference_gradient(f, x, 1e-5);
  EXPECT_NEAR(g[0], 6 * 0.7 - 1.2, 1e-9);
  EXPECT_NEAR(g[1], 0.7 - 1, 1e-9);
}

TEST(Bfgs, Rosenbrock) {
  const MinimizerResult r = minimize_bfgs(rosenbrock, {-1.2, 1.0});
  EXPECT_TRUE(r.converged) << r.status;
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
  EXPECT_LT(r.value, 1e-8);
}

TEST(Simplex, Rosenbrock) {
  MinimizerOptions o;
  o.max_iterations = 5000;
  const MinimizerResult r = minimize_simplex(rosenbrock, {-1.2, 1.0}, o);
  EXPECT_TRUE(r.converged) << r.status;
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 1e-3);
}

TEST(Bfgs, IterationCap) {
  MinimizerOptions o;
  o.max_iterations = 2;
  const MinimizerResult r = minimize_bfgs(rosenbrock, {-1.2, 1.0}, o);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.iterations, 2);
}

TEST(Bfgs, ValueMatchesObjectiveAtReportedPoint) {
  const MinimizerResult r = minimize_bfgs(rosenbrock, {0.3, 0.2});
  EXPECT_EQ(r.value, rosenbrock(r.x));
}

TEST(Minimizer, EmptyStartRejected) {
  EXPECT_THROW(minimize_bfgs(rosenbrock, {}), Error);
  EXPECT_THROW(minimize_simplex(rosenbrock, {}), Error);
}

}  // namespace
}  // namespace gibbsxy
