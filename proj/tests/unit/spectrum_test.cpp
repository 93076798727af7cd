// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gibbsxy/dense_hamiltonian.hpp"
#include "gibbsxy/error.hpp"
#include "gibbsxy/sector_spectrum.hpp"
#include "oracles.hpp"

namespace gibbsxy {
namespace {

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(SectorSpectrum, FourSiteGroundEnergies) {
  const ModelParams p{4, 1.0, 0.0};
  EXPECT_NEAR(sector_spectrum(Parity::Negative, p).ground_energy, -2.0, 1e-12);
  EXPECT_NEAR(sector_spectrum(Parity::Positive, p).ground_energy, -2.0, 1e-12);
}

TEST(SectorSpectrum, FourSiteMiddleLevelsVanish) {
  for (double g : {0.0, 0.3, 1.0}) {
    for (double h : {0.2, 1.0, 1.7}) {
      const auto s = sector_spectrum(Parity::Positive, {4, g, h});
      for (int i = 2; i <= 5; ++i) EXPECT_NEAR(s.levels[i].energy, 0.0, 1e-12);
    }
  }
}

TEST(SectorSpectrum, FourSiteLevelsFollowPrintedLabels) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double g = u(rng) / 2, h = u(rng);
    const auto want = oracle::four_site_levels(g, h);
    const auto pos = sector_spectrum(Parity::Positive, {4, g, h});
    const auto neg = sector_spectrum(Parity::Negative, {4, g, h});
    for (int i = 0; i < 8; ++i) {
      EXPECT_NEAR(pos.levels[i].energy, want[i], 1e-12) << "E+" << i;
      EXPECT_NEAR(neg.levels[i].energy, want[8 + i], 1e-12) << "E-" << i;
    }
  }
}

TEST(SectorSpectrum, MatchesIndependentDenseMatrix) {
  for (int n : {2, 4, 6, 8}) {
    for (double g : {0.0, 0.5, 1.0}) {
      for (double h : {0.0, 0.4, 1.0, 1.5}) {
        std::vector<double> analytic = sector_spectrum(Parity::Positive, {n, g, h}).energies();
        const auto neg = sector_spectrum(Parity::Negative, {n, g, h}).energies();
        analytic.insert(analytic.end(), neg.begin(), neg.end());
        analytic = sorted(analytic);
        const Eigen::VectorXd dense = oracle::eigenvalues(oracle::xy_hamiltonian(n, g, h));
        ASSERT_EQ(analytic.size(), static_cast<std::size_t>(dense.size()));
        for (std::size_t i = 0; i < analytic.size(); ++i) {
          EXPECT_NEAR(analytic[i], dense(static_cast<Eigen::Index>(i)), 1e-9)
              << "n=" << n << " g=" << g << " h=" << h;
        }
      }
    }
  }
}

TEST(SectorSpectrum, SectorsMatchParityBlocks) {
  // positive <-> even popcount block of the independent matrix
  for (double h : {0.3, 1.2}) {
    const int n = 6;
    const Eigen::MatrixXd H = oracle::xy_hamiltonian(n, 0.6, h);
    for (Parity parity : {Parity::Positive, Parity::Negative}) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < H.rows(); ++i) {
        if ((oracle::popcount(static_cast<std::size_t>(i)) % 2 == 0) == (parity == Parity::Positive)) {
          idx.push_back(i);
        }
      }
      Eigen::MatrixXd block(idx.size(), idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b) block(a, b) = H(idx[a], idx[b]);
      }
      const Eigen::VectorXd want = oracle::eigenvalues(block);
      const auto got = sorted(sector_spectrum(parity, {n, 0.6, h}).energies());
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_NEAR(got[i], want(static_cast<Eigen::Index>(i)), 1e-10);
      }
    }
  }
}

TEST(SectorSpectrum, LevelBookkeeping) {
  const auto s = sector_spectrum(Parity::Negative, {6, 0.7, 0.4});
  EXPECT_EQ(s.levels.size(), 32u);
  EXPECT_EQ(s.mode_order.size(), 6u);
  for (const auto& level : s.levels) {
    EXPECT_EQ(level.excitations % 2, 0);
    EXPECT_EQ(level.excitations, oracle::popcount(level.modes));
  }
  EXPECT_NEAR(s.levels[0].energy, s.reference_energy, 1e-15);
}

TEST(SectorSpectrum, ResourceCap) {
  Limits limits;
  limits.analytic_sites = 6;
  try {
    sector_spectrum(Parity::Positive, {8, 1, 0}, limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

TEST(SectorSpectrum, BoltzmannWeightsOrder) {
  const ModelParams p{4, 0.5, 0.5};
  const auto w = sector_boltzmann_weights(p, 1.0);
  ASSERT_EQ(w.size(), 16u);
  const auto e = oracle::four_site_levels(0.5, 0.5);
  double z = 0;
  for (double x : e) z += std::exp(-x);
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(w[i], std::exp(-e[i]) / z, 1e-12);
}

TEST(DenseHamiltonian, TwoSiteXX) {
  const Eigen::VectorXd ev = dense_spectrum({2, 0.0, 0.0}).energies;
  const double want[] = {-1, 0, 0, 1};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(ev(i), want[i], 1e-12);
}

TEST(DenseHamiltonian, FourSiteIsingGround) {
  EXPECT_NEAR(dense_spectrum({4, 1.0, 0.0}).energies(0), -2.0, 1e-12);
}

TEST(DenseHamiltonian, MatchesIndependentConstruction) {
  for (int n : {2, 4, 6}) {
    for (double g : {0.0, 0.35, 1.0}) {
      for (double h : {0.0, 0.8}) {
        const Eigen::MatrixXd H = build_dense_hamiltonian({n, g, h});
        EXPECT_LT((H - oracle::xy_hamiltonian(n, g, h)).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LT((H - H.transpose()).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_NEAR(H.trace(), 0.0, 1e-12);
      }
    }
  }
}

TEST(DenseHamiltonian, EigenvectorsOrthonormal) {
  const DenseSpectrum s = dense_spectrum({6, 0.4, 0.9});
  const Eigen::MatrixXd gram = s.eigenvectors.transpose() * s.eigenvectors;
  EXPECT_TRUE(gram.isIdentity(1e-10));
}

TEST(DenseHamiltonian, SixteenEigenvaluesEqualUnionOfSectors) {
  const ModelParams p{4, 1.0, 0.0};
  std::vector<double> analytic = sector_spectrum(Parity::Positive, p).energies();
  const auto neg = sector_spectrum(Parity::Negative, p).energies();
  analytic.insert(analytic.end(), neg.begin(), neg.end());
  analytic = sorted(analytic);
  const Eigen::VectorXd dense = dense_spectrum(p).energies;
  ASSERT_EQ(dense.size(), 16);
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(dense(i), analytic[i], 1e-12);
}

TEST(DenseHamiltonian, PauliTermAlgebra) {
  // Y on a single qubit
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
  EXPECT_THROW(add_pauli_term(m, 1, {1.0, "Y", {0}}), Error);  // not real
  add_pauli_term(m, 1, {1.0, "X", {0}});
  EXPECT_EQ(m(0, 1), 1.0);
  EXPECT_EQ(m(1, 0), 1.0);
  Eigen::MatrixXd yy = Eigen::MatrixXd::Zero(4, 4);
  add_pauli_term(yy, 2, {1.0, "YY", {0, 1}});
  // YY = [[0,0,0,-1],[0,0,1,0],[0,1,0,0],[-1,0,0,0]]
  EXPECT_EQ(yy(0, 3), -1.0);
  EXPECT_EQ(yy(1, 2), 1.0);
  EXPECT_EQ(yy(3, 0), -1.0);
}

TEST(DenseHamiltonian, ResourceCap) {
  Limits limits;
  limits.dense_sites = 4;
  try {
    build_dense_hamiltonian({6, 1, 0}, limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

}  // namespace
}  // namespace gibbsxy
