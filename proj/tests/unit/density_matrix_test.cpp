// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gibbsxy/density_matrix.hpp"
#include "gibbsxy/error.hpp"
#include "oracles.hpp"

namespace gibbsxy {
namespace {

Statevector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0;
  for (auto& a : amps) {
    a = Complex(nd(rng), nd(rng));
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return Statevector::from_amplitudes(amps);
}

TEST(DensityMatrix, PureStates) {
  const DensityMatrix zero = statevector_to_density(zero_state(1));
  EXPECT_EQ(zero.matrix()(0, 0), Complex(1));
  EXPECT_EQ(zero.matrix()(1, 1), Complex(0));
  const double r = 1 / std::sqrt(2.0);
  const DensityMatrix plus = statevector_to_density(Statevector::from_amplitudes({r, r}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(plus.matrix()(i, j).real(), 0.5, 1e-15);
  const DensityMatrix rho = statevector_to_density(random_state(3, 1));
  EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
  EXPECT_LT((rho.matrix() * rho.matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(rho.is_valid());
}

TEST(DensityMatrix, Validation) {
  EXPECT_THROW(DensityMatrix(2, Eigen::MatrixXcd::Identity(3, 3)), Error);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  EXPECT_FALSE(DensityMatrix::from_real(1, bad).is_valid());
  EXPECT_TRUE(DensityMatrix::maximally_mixed(3).is_valid());
}

// Schmidt form sum_i u_i |i>_A |i>_S reduces to diag(|u_i|^2) on either side.
TEST(PartialTrace, CopiedBasisGivesDiagonalOnBothSides) {
  const std::vector<double> u = {0.1, 0.5, 0.7, std::sqrt(1 - 0.01 - 0.25 - 0.49)};
  std::vector<Complex> amps(16, 0.0);
  for (std::size_t i = 0; i < 4; ++i) amps[i * 4 + i] = u[i];
  const Statevector s = Statevector::from_amplitudes(amps);
  const int sys[] = {2, 3};
  const int anc[] = {0, 1};
  for (const auto& keep : {std::span<const int>(sys), std::span<const int>(anc)}) {
    const DensityMatrix r = partial_trace(s, keep);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        EXPECT_NEAR(std::abs(r.matrix()(i, j) - (i == j ? u[i] * u[i] : 0.0)), 0.0, 1e-15);
      }
    }
  }
}

TEST(PartialTrace, ProductState) {
  const DensityMatrix a = statevector_to_density(random_state(2, 5));
  const DensityMatrix b = statevector_to_density(random_state(1, 6));
  const DensityMatrix ab(3, oracle::kron(a.matrix(), b.matrix()));
  const int keep_a[] = {0, 1};
  const int keep_b[] = {2};
  EXPECT_LT((partial_trace(ab, keep_a).matrix() - a.matrix()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((partial_trace(ab, keep_b).matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(PartialTrace, StatevectorAndDensityAgree) {
  const Statevector s = random_state(4, 9);
  const DensityMatrix rho = statevector_to_density(s);
  const int keep[] = {1, 3};
  EXPECT_LT((partial_trace(s, keep).matrix() - partial_trace(rho, keep).matrix()).cwiseAbs().maxCoeff(),
            1e-14);
  // explicit index loop: rho_13(a b, c d) = sum over q0 q2
  const auto& m = rho.matrix();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Complex acc = 0;
          for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) acc += m(x << 3 | a << 2 | y << 1 | b, x << 3 | c << 2 | y << 1 | d);
          EXPECT_NEAR(std::abs(partial_trace(s, keep).matrix()(2 * a + b, 2 * c + d) - acc), 0.0, 1e-14);
        }
}

TEST(PartialTrace, DegenerateKeepSets) {
  const Statevector s = random_state(2, 3);
  EXPECT_THROW(partial_trace(s, std::span<const int>{}), Error);
  const int all[] = {0, 1};
  EXPECT_THROW(partial_trace(s, all), Error);
  const int dup[] = {0, 0};
  EXPECT_THROW(partial_trace(random_state(3, 4), dup), Error);
  const int out_of_range[] = {2};
  EXPECT_THROW(partial_trace(s, out_of_range), Error);
}

TEST(Entropy, Examples) {
  std::vector<double> uniform(16, 1.0 / 16);
  EXPECT_NEAR(von_neumann_entropy(uniform), std::log(16.0), 1e-14);
  EXPECT_NEAR(von_neumann_entropy(statevector_to_density(random_state(3, 2))), 0.0, 1e-10);
  const std::vector<double> p = {0.75, 0.25};
  EXPECT_NEAR(von_neumann_entropy(p), -0.75 * std::log(0.75) - 0.25 * std::log(0.25), 1e-15);
  const std::vector<double> negative = {1.1, -0.1};
  EXPECT_THROW(von_neumann_entropy(negative), Error);
}

TEST(Entropy, MatrixMatchesEigenvalues) {
  Eigen::MatrixXd m(2, 2);
  m << 0.7, 0.2, 0.2, 0.3;
  const Eigen::VectorXd ev = oracle::eigenvalues(m);
  const double want = oracle::shannon({ev(0), ev(1)});
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::from_real(1, m)), want, 1e-14);
}

TEST(Fidelity, CommutingDiagonals) {
  const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
  const std::vector<double> q = {0.4, 0.3, 0.2, 0.1};
  double s = 0;
  for (int i = 0; i < 4; ++i) s += std::sqrt(p[i] * q[i]);
  EXPECT_NEAR(uhlmann_fidelity(DensityMatrix::diagonal(p), DensityMatrix::diagonal(q)), s * s, 1e-13);
}

TEST(Fidelity, PureStatesAndSymmetry) {
  const Statevector a = random_state(2, 21), b = random_state(2, 22);
  Complex overlap = 0;
  for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(a[i]) * b[i];
  const DensityMatrix ra = statevector_to_density(a), rb = statevector_to_density(b);
  EXPECT_NEAR(uhlmann_fidelity(ra, rb), std::norm(overlap), 1e-9);
  EXPECT_NEAR(uhlmann_fidelity(ra, ra), 1.0, 1e-9);
  const DensityMatrix mixed = partial_trace(random_state(4, 23), std::vector<int>{0, 1});
  const DensityMatrix other = partial_trace(random_state(4, 24), std::vector<int>{2, 3});
  EXPECT_NEAR(uhlmann_fidelity(mixed, other), uhlmann_fidelity(other, mixed), 1e-10);
  EXPECT_NEAR(uhlmann_fidelity(mixed, mixed), 1.0, 1e-10);
  // pure vs mixed reduces to <psi|sigma|psi>
  Eigen::VectorXcd va(4);
  for (int i = 0; i < 4; ++i) va(i) = a[static_cast<std::size_t>(i)];
  EXPECT_NEAR(uhlmann_fidelity(ra, mixed), (va.adjoint() * mixed.matrix() * va)(0, 0).real(), 1e-9);
}

TEST(Expectation, MatchesTrace) {
  Eigen::MatrixXd h(2, 2);
  h << 1.0, 0.5, 0.5, -1.0;
  const DensityMatrix rho = statevector_to_density(random_state(1, 4));
  EXPECT_NEAR(expectation(h, rho), (h.cast<Complex>() * rho.matrix()).trace().real(), 1e-15);
}

}  // namespace
}  // namespace gibbsxy
