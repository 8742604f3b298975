// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "shearbeam/model.hpp"

using namespace shearbeam;

namespace {

double& field(PhysicalParams& p, const std::string& name) {
  if (name == "rho") return p.rho;
  if (name == "alpha") return p.alpha;
  if (name == "lambda") return p.lambda;
  if (name == "mu") return p.mu;
  if (name == "rho1") return p.rho1;
  if (name == "K") return p.K;
  if (name == "gamma") return p.gamma;
  if (name == "beta") return p.beta;
  if (name == "b") return p.b;
  if (name == "rho3") return p.rho3;
  if (name == "delta") return p.delta;
  if (name == "kappa") return p.kappa;
  return p.L;
}

const std::vector<std::string> kParamNames{"rho",  "alpha", "lambda", "mu",    "rho1",  "K",  "gamma",
                                           "beta", "b",     "rho3",   "delta", "kappa", "L"};

}  // namespace

TEST(Validate, AcceptsReferenceValues) {
  const auto p = reference_params();
  EXPECT_DOUBLE_EQ(p.alpha, 6.0);
  EXPECT_DOUBLE_EQ(p.rho1, 2.0);
  EXPECT_DOUBLE_EQ(p.K, 365.0);
  const auto v = validate(p, SimulationConfig{});
  EXPECT_EQ(v.steps, 2000);
  EXPECT_DOUBLE_EQ(v.h(), 0.01);
}

TEST(Validate, BetaZeroIsNamed) {
  auto p = reference_params();
  p.beta = 0.0;
  try {
    validate(p, SimulationConfig{});
    FAIL() << "expected NonPositiveParameter";
  } catch (const NonPositiveParameter& e) {
    EXPECT_EQ(e.field(), "beta");
    EXPECT_NE(std::string(e.what()).find("NonPositiveParameter(\"beta\")"), std::string::npos);
  }
}

TEST(Validate, RejectionIsTotal) {
  for (const auto& name : kParamNames) {
    for (double bad : {0.0, -1.0, -1e-300}) {
      auto p = reference_params();
      field(p, name) = bad;
      try {
        validate(p, SimulationConfig{});
        ADD_FAILURE() << name << " = " << bad << " accepted";
      } catch (const NonPositiveParameter& e) {
        EXPECT_EQ(e.field(), name);
      }
    }
  }
}

TEST(Validate, DegenerateMesh) {
  SimulationConfig c;
  c.M = 1;
  EXPECT_THROW(validate(reference_params(), c), InvalidMesh);
}

TEST(Validate, TimeStep) {
  SimulationConfig c;
  c.dt = 0.0;
  EXPECT_THROW(validate(reference_params(), c), InvalidTimeStep);
  c.dt = 1.0;
  c.T = 0.4;  // rounds to zero steps
  EXPECT_THROW(validate(reference_params(), c), InvalidTimeStep);
  c.T = -1.0;
  EXPECT_THROW(validate(reference_params(), c), InvalidTimeStep);
}

TEST(Validate, ProbesInsideDomain) {
  SimulationConfig c;
  c.probe_points = {0.0};
  EXPECT_THROW(validate(reference_params(), c), InvalidSetting);
  c.probe_points = {1.0};
  EXPECT_THROW(validate(reference_params(), c), InvalidSetting);
  c.probe_points = {0.3, 0.99};
  EXPECT_NO_THROW(validate(reference_params(), c));
}

TEST(Validate, FinalTimeRedefinedAndIdempotent) {
  SimulationConfig c;
  c.dt = 0.3;
  c.T = 1.0;
  const auto v = validate(reference_params(), c);
  EXPECT_EQ(v.steps, 3);
  EXPECT_DOUBLE_EQ(v.config.T, 0.9);
  EXPECT_LE(std::abs(v.config.T - c.T), c.dt);
  const auto again = validate(v.params, v.config);
  EXPECT_EQ(again, v);
}

TEST(InitialDataCheck, BoundaryCompatibility) {
  EXPECT_NO_THROW(check_boundary_compatibility(reference_initial_data(2.0), 2.0));
  auto bad = reference_initial_data(1.0);
  bad.w1 = [](double x) { return x; };
  EXPECT_THROW(check_boundary_compatibility(bad, 1.0), InvalidSetting);
  ThermalData thermal{[](double) { return 0.0; }, [](double x) { return 1.0 + x; }};
  EXPECT_THROW(check_boundary_compatibility(thermal, 1.0), InvalidSetting);
}

TEST(ConfigFile, ParsesEveryKey) {
  const auto path = std::filesystem::temp_directory_path() / "shearbeam_model_test.cfg";
  {
    std::ofstream out(path);
    out << "# comment\n\n"
           "rho = 1.5\nalpha=6\nlambda = 2\nmu = 3\nrho1 = 2\nK = 365\ngamma = 4\nbeta = 5\n"
           "b = 6\nrho3 = 7\ndelta = 8\nkappa = 9\nL = 2\nM = 40\ndt = 0.01\nT = 1.5\n"
           "probes = 0.25, 1.5\nsnapshot_stride = 7\noutput_dir = results/run1\n";
  }
  PhysicalParams p;
  SimulationConfig c;
  load_config_file(path, p, c);
  EXPECT_DOUBLE_EQ(p.rho, 1.5);
  EXPECT_DOUBLE_EQ(p.kappa, 9.0);
  EXPECT_DOUBLE_EQ(p.L, 2.0);
  EXPECT_EQ(c.M, 40);
  EXPECT_DOUBLE_EQ(c.T, 1.5);
  EXPECT_EQ(c.probe_points, (std::vector<double>{0.25, 1.5}));
  EXPECT_EQ(c.snapshot_stride, 7);
  EXPECT_EQ(c.output_dir, std::filesystem::path("results/run1"));
  std::filesystem::remove(path);
}

TEST(ConfigFile, UnknownKeyAndBadValue) {
  PhysicalParams p;
  SimulationConfig c;
  EXPECT_THROW(apply_setting(p, c, "theta", "1"), ConfigError);
  EXPECT_THROW(apply_setting(p, c, "M", "4.5"), ConfigError);
  EXPECT_THROW(apply_setting(p, c, "rho", "abc"), ConfigError);
  EXPECT_THROW(load_config_file("/nonexistent/shearbeam.cfg", p, c), ConfigError);
  EXPECT_EQ(config_keys().size(), 19u);
}
