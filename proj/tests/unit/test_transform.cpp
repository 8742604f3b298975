// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shearbeam/transform.hpp"

using namespace shearbeam;

namespace {

constexpr double kPi = std::numbers::pi;
const SpatialFunction kZero = [](double) { return 0.0; };
const SpatialFunction kSine = [](double x) { return std::sin(kPi * x); };

ThermalData manufactured_eta_sine(const PhysicalParams& p) {
  return {kZero, [p](double x) { return -(p.delta / p.rho3) * kPi * kPi * std::sin(kPi * x); }};
}

}  // namespace

TEST(SolveEta, ZeroDataGivesExactZero) {
  const UniformMesh mesh(16, 1.0);
  const auto eta = solve_eta(EtaProblem::from_functions({kZero, kZero}, kZero, reference_params(), mesh));
  for (double v : eta.coefficients()) EXPECT_EQ(v, 0.0);
}

TEST(SolveEta, ManufacturedSineConvergesAtSecondOrder) {
  auto p = reference_params();
  p.delta = 2.5;
  p.rho3 = 0.7;
  std::vector<double> errs;
  for (int M : {20, 40, 80, 160}) {
    const auto eta = solve_eta(EtaProblem::from_functions(manufactured_eta_sine(p), kZero, p, UniformMesh(M, 1.0)));
    errs.push_back(l2_error(eta, kSine));
  }
  EXPECT_LT(errs.front(), 1e-2);
  for (std::size_t i = 1; i < errs.size(); ++i) EXPECT_GE(std::log2(errs[i - 1] / errs[i]), 1.9);
}

TEST(SolveEta, CancellingTermsGiveNearZero) {
  const auto p = reference_params();
  const ThermalData data{kSine, [p](double x) { return -(p.kappa / p.rho3) * kPi * kPi * std::sin(kPi * x); }};
  double prev = 0.0;
  for (int M : {20, 40, 80}) {
    const auto eta = solve_eta(EtaProblem::from_functions(data, kZero, p, UniformMesh(M, 1.0)));
    const double norm = l2_norm(eta);
    EXPECT_LT(norm, 5e-3);
    if (prev > 0.0) EXPECT_GE(std::log2(prev / norm), 1.9);
    prev = norm;
  }
}

TEST(SolveEta, DivergenceTermSign) {
  // phi1 = sin(pi x): delta eta'' = beta pi cos(pi x), eta(0) = eta(1) = 0.
  auto p = reference_params();
  p.beta = 1.5;
  p.delta = 3.0;
  const double k = p.beta / p.delta;
  const SpatialFunction exact = [k](double x) { return k * (-std::cos(kPi * x) + 1.0 - 2.0 * x) / kPi; };
  const UniformMesh mesh(200, 1.0);
  const auto eta = solve_eta(EtaProblem::from_functions({kZero, kZero}, kSine, p, mesh));
  EXPECT_LT(l2_error(eta, exact), 1e-4);
}

TEST(SolveEta, LinearInData) {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const UniformMesh mesh(33, 1.0);
  auto random_fe = [&] {
    FeFunction f(mesh);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = d(gen);
    return f;
  };
  const auto p = reference_params();
  const EtaProblem a{random_fe(), random_fe(), random_fe(), p};
  const EtaProblem b{random_fe(), random_fe(), random_fe(), p};
  const EtaProblem sum{a.theta0 + b.theta0, a.theta1 + b.theta1, a.phi1 + b.phi1, p};
  const auto lhs = solve_eta(sum);
  const auto rhs = solve_eta(a) + solve_eta(b);
  for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_NEAR(lhs[i], rhs[i], 1e-10);
}

TEST(WInitialData, ReadsEtaAndTheta0) {
  const UniformMesh mesh(8, 1.0);
  const FeFunction zero(mesh);
  auto [w0, w1] = w_initial_data(zero, zero);
  EXPECT_EQ(l2_norm(w0), 0.0);
  EXPECT_EQ(l2_norm(w1), 0.0);

  const auto theta0 = interpolate(kSine, mesh);
  std::tie(w0, w1) = w_initial_data(theta0, zero);
  EXPECT_EQ(l2_norm(w0), 0.0);
  for (std::size_t i = 0; i < w1.size(); ++i) EXPECT_EQ(w1[i], theta0[i]);
}

TEST(WInitialData, ComposedWithManufacturedEta) {
  const auto p = reference_params();
  const UniformMesh mesh(80, 1.0);
  const auto init = to_w_form(kZero, kZero, kZero, kZero, kZero, manufactured_eta_sine(p), p, mesh);
  const auto w0 = interpolate(init.w0, mesh);
  EXPECT_LT(l2_error(w0, kSine), 1e-3);
  for (double x : {0.0, 0.3, 1.0}) EXPECT_EQ(init.w1(x), 0.0);
}
