// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/transform.hpp"

namespace shearbeam {

EtaProblem EtaProblem::from_functions(const ThermalData& thermal, const SpatialFunction& phi1,
                                      const PhysicalParams& params, const UniformMesh& mesh) {
  check_boundary_compatibility(thermal, mesh.length());
  return EtaProblem{interpolate(thermal.theta0, mesh), interpolate(thermal.theta1, mesh),
                    interpolate(phi1, mesh), params};
}

FeFunction solve_eta(const EtaProblem& p) {
  const UniformMesh& mesh = p.theta0.mesh();
  const TriDiag mass = build_mass(mesh);
  const TriDiag stiff = build_stiffness(mesh);
  // (phi1, v') = sum_j c_j (phi_j, phi_i') = (G^T c)_i
  const TriDiag grad_t = build_gradient(mesh).transposed();

  const auto m_theta1 = mass.apply(p.theta1.coefficients());
  const auto s_theta0 = stiff.apply(p.theta0.coefficients());
  const auto g_phi1 = grad_t.apply(p.phi1.coefficients());

  const auto& q = p.params;
  std::vector<double> rhs(mesh.interior());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    rhs[i] = (-q.rho3 * m_theta1[i] - q.kappa * s_theta0[i] + q.beta * g_phi1[i]) / q.delta;
  }
  return FeFunction(mesh, stiff.solve(rhs));
}

std::pair<FeFunction, FeFunction> w_initial_data(const FeFunction& theta0, const FeFunction& eta) {
  return {eta, theta0};
}

InitialData to_w_form(const SpatialFunction& u0, const SpatialFunction& u1,
                      const SpatialFunction& phi0, const SpatialFunction& phi1,
                      const SpatialFunction& psi0, const ThermalData& thermal,
                      const PhysicalParams& params, const UniformMesh& mesh) {
  const auto problem = EtaProblem::from_functions(thermal, phi1, params, mesh);
  auto [w0, w1] = w_initial_data(problem.theta0, solve_eta(problem));
  // Sampling a P1 function at the nodes returns its coefficients, so the
  // stepper's interpolation reproduces w0 and w1 exactly.
  return InitialData{u0,
                     u1,
                     phi0,
                     phi1,
                     psi0,
                     [w0 = std::move(w0)](double x) { return w0(x); },
                     [w1 = std::move(w1)](double x) { return w1(x); }};
}

}  // namespace shearbeam
