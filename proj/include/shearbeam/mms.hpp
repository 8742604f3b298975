// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "shearbeam/femesh.hpp"
#include "shearbeam/model.hpp"
#include "shearbeam/stepper.hpp"

namespace shearbeam {

/// Closed-form exact solution of the forced system together with the source
/// terms that make it exact.
struct ManufacturedCase {
  PhysicalParams params;

  SpaceTimeFunction u, u_x, xi;          // xi = u_t
  SpaceTimeFunction phi, phi_x, Phi;     // Phi = phi_t
  SpaceTimeFunction psi, psi_x;
  SpaceTimeFunction w, w_x, vartheta;    // vartheta = w_t
  SourceTerms sources;

  /// Exact fields and velocities at t = 0.
  InitialData initial_data() const;
};

/// Exact solution on L = 1
///   u = 0.01 t x^2 (x - 1)^2,   phi = e^t sin(pi x),
///   psi = e^t x cos(pi x / 2),  w = 2 e^t sin(pi x),
/// with
///   f1 = rho u_tt - alpha u_xx - lambda (phi - u) + mu u_t
///   f2 = rho1 phi_tt - K (phi_x + psi)_x + lambda (phi - u) + gamma phi_t + beta w_xt
///   f3 = -b psi_xx + K (phi_x + psi)
///   f4 = rho3 w_tt - delta w_xx + beta phi_xt - kappa w_xxt
/// Derivatives are written out by hand; the test suite checks them against
/// finite differences. Any positive parameter set is accepted; L must be 1.
ManufacturedCase paper_case(const PhysicalParams& params = reference_params());

/// Square root of the sum of the eight squared L2 errors
///   xi, u_x, phi - u, Phi, phi_x + psi, psi_x, vartheta, w_x
/// against the exact solution at time t, 3-point Gauss per element.
double error_norm(const State& s, const ManufacturedCase& c, double t);

struct ConvergenceLevel {
  int M;
  double dt;
};

struct ConvergenceRow {
  int M;
  double dt;
  double error;
  std::optional<double> ratio;           ///< previous error / this error
  std::optional<double> observed_order;  ///< log2(ratio)
  long steps;
};

/// dt = c / M for each M.
std::vector<ConvergenceLevel> levels_from_rule(const std::vector<int>& Ms, double c);

/// The six levels of the reference study: M = 40 .. 1280, dt = 0.04 / M.
std::vector<ConvergenceLevel> reference_levels();

/// Runs every level to final time T with the case's sources and interpolated
/// initial data. Up to `jobs` levels run concurrently. Levels must be sorted
/// by nondecreasing M. Solver failures are rethrown tagged with the level.
std::vector<ConvergenceRow> convergence_table(const ManufacturedCase& c,
                                              const std::vector<ConvergenceLevel>& levels,
                                              double T, unsigned jobs = 1);

/// Least-squares slope of log(error) against log(h + dt).
double loglog_slope(const std::vector<ConvergenceRow>& rows, double L = 1.0);

}  // namespace shearbeam
