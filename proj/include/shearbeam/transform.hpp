// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include "shearbeam/femesh.hpp"
#include "shearbeam/model.hpp"

namespace shearbeam {

/// Data of the auxiliary elliptic problem
///   delta eta'' = rho3 theta1 - kappa theta0'' + beta phi1',  eta(0) = eta(L) = 0,
/// which makes w = int_0^t theta ds + eta satisfy the dissipative equation.
struct EtaProblem {
  FeFunction theta0;
  FeFunction theta1;
  FeFunction phi1;
  PhysicalParams params;

  /// Interpolates the closures onto the mesh.
  static EtaProblem from_functions(const ThermalData& thermal, const SpatialFunction& phi1,
                                   const PhysicalParams& params, const UniformMesh& mesh);
};

/// P1 solution of
///   delta (eta', v') = -rho3 (theta1, v) - kappa (theta0', v') + beta (phi1, v')
/// for every v in the FE space.
FeFunction solve_eta(const EtaProblem& problem);

/// w(x, 0) = eta, w_t(x, 0) = theta0.
std::pair<FeFunction, FeFunction> w_initial_data(const FeFunction& theta0, const FeFunction& eta);

/// Full w-form initial data from mechanical data and temperatures.
InitialData to_w_form(const SpatialFunction& u0, const SpatialFunction& u1,
                      const SpatialFunction& phi0, const SpatialFunction& phi1,
                      const SpatialFunction& psi0, const ThermalData& thermal,
                      const PhysicalParams& params, const UniformMesh& mesh);

}  // namespace shearbeam
