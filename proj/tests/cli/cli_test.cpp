// Copyright 2026 The gibbsxy Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the installed-layout binary and checks stdout, stderr and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("gibbsxy_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

Outcome run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path base = scratch() / std::to_string(counter++);
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" GIBBSXY_CLI_PATH "' " + args + " >'" +
                          base.string() + ".out' 2>'" + base.string() + ".err'";
  const int status = std::system(cmd.c_str());
  Outcome r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base.string() + ".out");
  r.err = slurp(base.string() + ".err");
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(Spectrum, IsingFourSites) {
  const Outcome csv = run("spectrum -N 4 -g 1 -h 0 --format csv");
  ASSERT_EQ(csv.code, 0) << csv.err;
  const auto rows = lines(csv.out);
  ASSERT_EQ(rows.size(), 17u);
  EXPECT_EQ(rows[0], "parity,modes,energy");
  double min_pos = 1e9, min_neg = 1e9;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double e = std::stod(rows[i].substr(rows[i].rfind(',') + 1));
    double& m = rows[i].rfind("positive", 0) == 0 ? min_pos : min_neg;
    m = std::min(m, e);
  }
  EXPECT_NEAR(min_pos, -2.0, 1e-12);
  EXPECT_NEAR(min_neg, -2.0, 1e-12);
  const Outcome table = run("spectrum -N 4 -g 1 -h 0");
  EXPECT_NE(table.out.find("ground[positive] = -2"), std::string::npos);
  EXPECT_NE(table.out.find("ground[negative] = -2"), std::string::npos);
}

TEST(Spectrum, DenseResidual) {
  const Outcome r = run("spectrum -N 4 -g 0.5 -h 1 --format json");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LT(j["dense_residual"].get<double>(), 1e-9);
  EXPECT_EQ(j["sectors"].size(), 2u);
}

TEST(Spectrum, OddChainIsUsageError) {
  const Outcome r = run("spectrum -N 3 -g 1 -h 0");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("even"), std::string::npos);
}

TEST(Spectrum, AnalyticCapIsResourceError) {
  EXPECT_EQ(run("spectrum -N 20 -g 1 -h 0").code, 4);
  EXPECT_EQ(run("spectrum -N 8 -g 1 -h 0", "GIBBSXY_ANALYTIC_SITES=6").code, 4);
}

TEST(Degeneracy, Profiles) {
  EXPECT_EQ(run("degeneracy -N 4 -n 2").out, "1-fold: 2, 4-fold: 1, total 6 = C(4,2)\n");
  EXPECT_NE(run("degeneracy -N 8 -n 4").out.find("total 70 = C(8,4)"), std::string::npos);
  EXPECT_EQ(run("degeneracy -N 4 -n 0").out, "1-fold: 1, total 1 = C(4,0)\n");
  EXPECT_EQ(run("degeneracy -N 8 -n 4 --format csv").out,
            "n_sites,n_fermions,degree,count\n8,4,1,6\n8,4,4,12\n8,4,16,1\n");
  EXPECT_EQ(run("degeneracy -N 4 -n 1").code, 2);
}

TEST(GrAngles, ModelIdentities) {
  const Outcome r = run("gr-angles --model 4 0.5 0.5 1 --format json");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["angles"].size(), 15u);
  for (int i : {8, 9, 12, 13}) EXPECT_NEAR(j["angles"][i]["value"].get<double>(), kPi / 2, 1e-9);
  EXPECT_TRUE(j["all_hold"].get<bool>());
  for (const auto& id : j["identities"]) EXPECT_LT(id["residual"].get<double>(), 1e-9);
}

TEST(GrAngles, DistributionFiles) {
  const fs::path uniform = scratch() / "uniform.txt";
  {
    std::ofstream f(uniform);
    for (int i = 0; i < 16; ++i) f << "0.0625\n";
  }
  const json ju = json::parse(run("gr-angles --distribution '" + uniform.string() + "' --format json").out);
  for (const auto& a : ju["angles"]) EXPECT_NEAR(a["value"].get<double>(), kPi / 2, 1e-15);

  const fs::path point = scratch() / "point.csv";
  {
    std::ofstream f(point);
    f << "# point mass\n1";
    for (int i = 1; i < 16; ++i) f << ",0";
    f << "\n";
  }
  const json jp = json::parse(run("gr-angles --distribution '" + point.string() + "' --format json").out);
  ASSERT_EQ(jp["angles"].size(), 15u);
  for (const auto& a : jp["angles"]) EXPECT_EQ(a["value"].get<double>(), 0.0);

  const fs::path bad = scratch() / "bad.txt";
  {
    std::ofstream f(bad);
    f << "0.5 zero.5\n";
  }
  EXPECT_EQ(run("gr-angles --distribution '" + bad.string() + "'").code, 2);
  EXPECT_EQ(run("gr-angles --distribution /nonexistent/file").code, 2);
  EXPECT_EQ(run("gr-angles").code, 2);
}

TEST(GibbsExact, Dump) {
  const Outcome r = run("gibbs-exact -N 4 -g 1 -h 0.5 -b 1");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  double sum = 0;
  for (const auto& p : j["probabilities"]) sum += p.get<double>();
  EXPECT_NEAR(sum, 1.0, 1e-14);
  EXPECT_NEAR(j["free_energy"].get<double>(), -j["log_partition_function"].get<double>(), 1e-14);
}

TEST(Vqa, HeadlinePoint) {
  const Outcome r = run("vqa -N 4 -g 1 -h 0.5 -b 1 --layers 3 --restarts 20");
  EXPECT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_GT(j["max_fidelity"].get<double>(), 0.98);
  EXPECT_NE(r.err.find("fidelity"), std::string::npos);
  EXPECT_NE(r.err.find("converged restarts"), std::string::npos);
}

TEST(Vqa, HotLimit) {
  const Outcome r = run("vqa -N 4 -g 1 -h 0.5 -b 0.01 --restarts 3 --threshold 0.999");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_GT(json::parse(r.out)["max_fidelity"].get<double>(), 0.999);
}

TEST(Vqa, ExitCodes) {
  EXPECT_EQ(run("vqa -N 4 -g 1 -h 0.5 -b 1 --restarts 0").code, 2);
  EXPECT_EQ(run("vqa -N 4 -b -1").code, 2);
  EXPECT_EQ(run("vqa -N 4 --ancilla-mode nope").code, 2);
  EXPECT_EQ(run("vqa -N 6 --ancilla-mode reduced_xy").code, 2);
  EXPECT_EQ(run("vqa -N 4 --restarts 1", "GIBBSXY_MAX_QUBITS=6").code, 4);
  EXPECT_EQ(run("vqa -N 2 --restarts 1 --layers 1 --threshold 1.5").code, 1);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 2);
}

TEST(Vqa, ByteIdenticalOutput) {
  const std::string args = "vqa -N 2 -g 0.5 -h 1 -b 2 --layers 1 --restarts 3 --seed 9";
  const Outcome a = run(args);
  const Outcome b = run(args);
  const Outcome c = run(args + " --jobs 3");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_NE(a.out, run("vqa -N 2 -g 0.5 -h 1 -b 2 --layers 1 --restarts 3 --seed 10").out);
}

TEST(Vqa, OutputFile) {
  const fs::path out = scratch() / "vqa.json";
  const Outcome r = run("vqa -N 2 --layers 1 --restarts 1 -o '" + out.string() + "'");
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(slurp(out))["restarts"].size(), 1u);
}

TEST(Sweep, SinglePointMatchesVqa) {
  const Outcome sweep = run("sweep -N 2 --gammas 0.5 --fields 1 --betas 2 --layers 1 --restarts 3 --format json");
  const Outcome vqa = run("vqa -N 2 -g 0.5 -h 1 -b 2 --layers 1 --restarts 3");
  ASSERT_EQ(sweep.code, 0) << sweep.err;
  const json points = json::parse(sweep.out);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(points[0]["result"], json::parse(vqa.out));
}

TEST(Sweep, CsvGridOrder) {
  const Outcome r = run("sweep -N 2 --gammas 0 1 --fields 0.5 --beta-min 0.5 --beta-max 2 --beta-points 2 "
                    "--layers 1 --restarts 2 --jobs 2");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "beta,gamma,h,fidelity_best,free_energy_best,exact_free_energy,restarts,wall_time,status");
  EXPECT_EQ(rows[1].rfind("0.5,0,0.5,", 0), 0u) << rows[1];
  EXPECT_EQ(rows[2].rfind("2,0,0.5,", 0), 0u) << rows[2];
  EXPECT_EQ(rows[3].rfind("0.5,1,0.5,", 0), 0u) << rows[3];
  EXPECT_EQ(rows[4].rfind("2,1,0.5,", 0), 0u) << rows[4];
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].substr(rows[i].rfind(',') + 1), "ok");
  }
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  EXPECT_EQ(run("sweep -N 2 --betas 0 1").code, 2);
}

TEST(Sweep, JsonIsByteIdentical) {
  const std::string args = "sweep -N 2 --gammas 0 --fields 0.5 1 --betas 1 --layers 1 --restarts 2 --format json";
  const Outcome a = run(args);
  const Outcome b = run(args + " --jobs 2");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

// The full default grid: 3 gammas x 3 fields x 8 log-spaced betas.
TEST(Sweep, DefaultGrid) {
  const Outcome r = run("sweep -N 4 --restarts 20 --jobs 0");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 73u);
  double mean0 = 0, mean05 = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> f;
    std::istringstream in(rows[i]);
    for (std::string c; std::getline(in, c, ',');) f.push_back(c);
    ASSERT_EQ(f.size(), 9u);
    const double fid = std::stod(f[3]);
    EXPECT_GT(fid, 0.98) << rows[i];
    if (f[1] == "0") mean0 += fid / 24;
    if (f[1] == "0.5") mean05 += fid / 24;
  }
  // reported, not asserted
  std::printf("mean fidelity gamma=0: %.8f, gamma=0.5: %.8f\n", mean0, mean05);
}

}  // namespace
