// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gibbsxy/brickwall.hpp"
#include "gibbsxy/dense_hamiltonian.hpp"
#include "gibbsxy/sector_spectrum.hpp"
#include "gibbsxy/statevector.hpp"
#include "gibbsxy/vqa.hpp"

namespace gx = gibbsxy;

namespace {

std::vector<double> random_angles(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 6.283185307179586);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

void BM_Ry(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gx::Statevector sv(n);
  for (auto _ : state) {
    sv.apply_ry(n / 2, 0.3);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
}
BENCHMARK(BM_Ry)->Arg(8)->Arg(12)->Arg(16);

void BM_Rp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gx::Statevector sv(n);
  const gx::Matrix4 m = gx::rp_matrix(0.4, 1.1).cast<gx::Complex>();
  for (auto _ : state) {
    sv.apply_two_qubit(0, n - 1, m);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
}
BENCHMARK(BM_Rp)->Arg(8)->Arg(12)->Arg(16);

gx::VqaConfig headline(int n) {
  gx::VqaConfig c;
  c.model = {n, 1.0, 0.5};
  c.beta = 1.0;
  return c;
}

void BM_FreeEnergyFast(benchmark::State& state) {
  const gx::GibbsPqc pqc(headline(static_cast<int>(state.range(0))));
  const auto t = random_angles(pqc.config().theta_count(), 1);
  const auto p = random_angles(pqc.config().phi_count(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pqc.free_energy(t, p));
}
BENCHMARK(BM_FreeEnergyFast)->Arg(2)->Arg(4)->Arg(6);

void BM_FreeEnergyFull(benchmark::State& state) {
  const gx::GibbsPqc pqc(headline(static_cast<int>(state.range(0))));
  const auto t = random_angles(pqc.config().theta_count(), 1);
  const auto p = random_angles(pqc.config().phi_count(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pqc.free_energy_full(t, p));
}
BENCHMARK(BM_FreeEnergyFull)->Arg(2)->Arg(4)->Arg(6);

void BM_DenseSpectrum(benchmark::State& state) {
  const gx::ModelParams m{static_cast<int>(state.range(0)), 0.5, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(gx::dense_spectrum(m).energies.data());
}
BENCHMARK(BM_DenseSpectrum)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SectorSpectrum(benchmark::State& state) {
  const gx::ModelParams m{static_cast<int>(state.range(0)), 0.5, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gx::sector_spectrum(gx::Parity::Positive, m).ground_energy);
  }
}
BENCHMARK(BM_SectorSpectrum)->Arg(4)->Arg(8)->Arg(12);

void BM_OneRestart(benchmark::State& state) {
  auto c = headline(4);
  c.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(gx::optimize(c).best.free_energy);
}
BENCHMARK(BM_OneRestart)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
