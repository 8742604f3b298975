// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shearbeam/cli.hpp"
#include "shearbeam/csv_io.hpp"

namespace fs = std::filesystem;
using shearbeam::cli::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("shearbeam_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv(shearbeam::cli::kOutputDirEnv);
  }
  void TearDown() override {
    unsetenv(shearbeam::cli::kOutputDirEnv);
    fs::remove_all(dir_);
  }
  std::vector<std::string> small_run(const fs::path& out) const {
    return {"simulate", "--M", "10", "--dt", "0.01", "--T", "0.2", "--snapshot_stride", "5",
            "--probes", "0.25,0.6", "--output_dir", out.string()};
  }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SimulateWritesOutputsDeterministically) {
  const auto r1 = call(small_run(dir_ / "a"));
  ASSERT_EQ(r1.code, 0) << r1.err;
  EXPECT_NE(r1.out.find("steps=20"), std::string::npos);
  EXPECT_NE(r1.out.find("monotone=yes"), std::string::npos);
  for (const char* f : {"energy.csv", "snapshots.csv", "probe_0_x0.25.csv", "probe_1_x0.6.csv"})
    EXPECT_TRUE(fs::exists(dir_ / "a" / f)) << f;

  const std::string energy = slurp(dir_ / "a" / "energy.csv");
  EXPECT_EQ(energy.rfind("n,t,E,logE,negLogEOverT\n", 0), 0u);
  EXPECT_EQ(std::count(energy.begin(), energy.end(), '\n'), 22);
  const std::string snaps = slurp(dir_ / "a" / "snapshots.csv");
  EXPECT_EQ(snaps.rfind("x,t,u,phi,psi,w\n", 0), 0u);
  // levels 0, 5, 10, 15, 20 with 11 nodes each
  EXPECT_EQ(std::count(snaps.begin(), snaps.end(), '\n'), 1 + 5 * 11);

  ASSERT_EQ(call(small_run(dir_ / "b")).code, 0);
  for (const char* f : {"energy.csv", "snapshots.csv", "probe_0_x0.25.csv", "probe_1_x0.6.csv"})
    EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  const fs::path cfg = dir_ / "run.cfg";
  std::ofstream(cfg) << "# small run\nM = 8\ndt = 0.05\nT = 0.1\noutput_dir = " << (dir_ / "from_cfg").string()
                     << "\n";
  auto r = call({"simulate", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("steps=2 "), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "from_cfg" / "energy.csv"));

  setenv(shearbeam::cli::kOutputDirEnv, (dir_ / "from_env").string().c_str(), 1);
  r = call({"simulate", "--config", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "from_env" / "energy.csv"));

  r = call({"simulate", "--config", cfg.string(), "--output_dir", (dir_ / "from_flag").string(), "--T", "0.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("steps=4 "), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "from_flag" / "energy.csv"));
}

TEST_F(CliTest, MissingConfigNamesThePath) {
  const auto r = call({"simulate", "--config", "does_not_exist.cfg"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("ConfigError: does_not_exist.cfg", 0), 0u) << r.err;
}

TEST_F(CliTest, RejectsBadInput) {
  EXPECT_EQ(call({"simulate", "--bogus", "1"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  const auto r = call({"simulate", "--beta", "0", "--output_dir", dir_.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("beta"), std::string::npos) << r.err;
  EXPECT_EQ(call({"simulate", "--sources", "other", "--output_dir", dir_.string()}).code, 2);
}

TEST_F(CliTest, HelpListsEveryKey) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const auto& key : shearbeam::config_keys()) EXPECT_NE(r.out.find("--" + key), std::string::npos) << key;
  for (const char* sub : {"simulate", "convergence", "energy", "eta-check"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
}

TEST_F(CliTest, EnergySubcommand) {
  ASSERT_EQ(call(small_run(dir_ / "run")).code, 0);
  const auto input = (dir_ / "run" / "energy.csv").string();
  auto r = call({"energy", "--input", input});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("sigma1_hat,"), std::string::npos);
  EXPECT_NE(r.out.find("monotone_violations,0"), std::string::npos);

  r = call({"energy", "--input", input, "--window", "0.19,0.2"});
  EXPECT_EQ(r.code, 2);
  r = call({"energy", "--input", (dir_ / "missing.csv").string()});
  EXPECT_EQ(r.code, 3);
  r = call({"energy", "--input", input, "--output", (dir_ / "report.csv").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(slurp(dir_ / "report.csv").find("fit_residual,"), std::string::npos);
}

TEST_F(CliTest, ConvergenceSubcommand) {
  const auto r = call({"convergence", "--levels", "10,20", "--T", "0.1", "--jobs", "2", "--output_dir", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("M,dt,error,ratio,order\n10,", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("loglog_slope="), std::string::npos);
  const std::string table = slurp(dir_ / "convergence.csv");
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
  EXPECT_TRUE(fs::exists(dir_ / "convergence_loglog.csv"));
  EXPECT_EQ(call({"convergence", "--dt-rule", "c/M^2", "--output_dir", dir_.string()}).code, 2);
}

TEST_F(CliTest, EtaCheckSubcommand) {
  const auto r = call({"eta-check", "--levels", "10,20"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("zero_case_max_abs=0\n"), std::string::npos) << r.out;
}
