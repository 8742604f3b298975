// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shearbeam {

State initial_state(const InitialData& init, const UniformMesh& mesh) {
  check_boundary_compatibility(init, mesh.length());
  State s(mesh);
  s.u = interpolate(init.u0, mesh);
  s.xi = interpolate(init.u1, mesh);
  s.phi = interpolate(init.phi0, mesh);
  s.Phi = interpolate(init.phi1, mesh);
  s.psi = interpolate(init.psi0, mesh);
  s.w = interpolate(init.w0, mesh);
  s.vartheta = interpolate(init.w1, mesh);
  return s;
}

FeFunction psi_rate(const State& now, const State& previous) {
  const double dt = now.t - previous.t;
  return (1.0 / dt) * (now.psi - previous.psi);
}

namespace {

// Node i couples to i - 1 and i + 1; with four interleaved unknowns the widest
// reach is from the first field of one node to the last field of its neighbour.
constexpr std::size_t kHalfBand = 2 * kFieldsPerNode - 1;

void add_block(BandedMatrix& a, Field row, Field col, double coef, const TriDiag& t) {
  if (coef == 0.0) return;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    a.add(BlockSystem::index(i, row), BlockSystem::index(i, col), coef * t.diag[i]);
    if (i + 1 < n) {
      a.add(BlockSystem::index(i, row), BlockSystem::index(i + 1, col), coef * t.sup[i]);
      a.add(BlockSystem::index(i + 1, row), BlockSystem::index(i, col), coef * t.sub[i]);
    }
  }
}

}  // namespace

BlockSystem::BlockSystem(const PhysicalParams& params, const UniformMesh& mesh, double dt)
    : params_(params),
      mesh_(mesh),
      dt_(dt),
      mass_(build_mass(mesh)),
      stiffness_(build_stiffness(mesh)),
      gradient_(build_gradient(mesh)),
      matrix_(kFieldsPerNode * mesh.interior(), kHalfBand, kHalfBand) {
  if (!(dt > 0.0)) throw InvalidTimeStep("dt");
  const auto& p = params_;
  const TriDiag grad_t = gradient_.transposed();
  using F = Field;

  // (1) rho/dt (xi - xi_old) + alpha S u - lambda M (phi - u) + mu M xi
  add_block(matrix_, F::Xi, F::Xi, p.rho / dt + p.lambda * dt + p.mu, mass_);
  add_block(matrix_, F::Xi, F::Xi, p.alpha * dt, stiffness_);
  add_block(matrix_, F::Xi, F::Phi, -p.lambda * dt, mass_);

  // (2) rho1/dt (Phi - Phi_old) + K (phi_x + psi, .x) + lambda M (phi - u)
  //     + gamma M Phi + beta (vartheta_x, .)
  add_block(matrix_, F::Phi, F::Phi, p.rho1 / dt + p.lambda * dt + p.gamma, mass_);
  add_block(matrix_, F::Phi, F::Phi, p.K * dt, stiffness_);
  add_block(matrix_, F::Phi, F::Xi, -p.lambda * dt, mass_);
  add_block(matrix_, F::Phi, F::Psi, p.K, grad_t);
  add_block(matrix_, F::Phi, F::Vartheta, p.beta, gradient_);

  // (3) b (psi_x, .x) + K (phi_x + psi, .)
  add_block(matrix_, F::Psi, F::Psi, p.b, stiffness_);
  add_block(matrix_, F::Psi, F::Psi, p.K, mass_);
  add_block(matrix_, F::Psi, F::Phi, p.K * dt, gradient_);

  // (4) rho3/dt (vartheta - vartheta_old) + delta S w + beta (Phi_x, .) + kappa S vartheta
  add_block(matrix_, F::Vartheta, F::Vartheta, p.rho3 / dt, mass_);
  add_block(matrix_, F::Vartheta, F::Vartheta, p.delta * dt + p.kappa, stiffness_);
  add_block(matrix_, F::Vartheta, F::Phi, p.beta, gradient_);

  matrix_norm_ = matrix_.norm_inf();
  lu_.emplace(matrix_);
}

std::vector<double> BlockSystem::rhs(const State& s,
                                     const std::array<std::vector<double>, 4>* loads) const {
  const auto& p = params_;
  const std::size_t n = mesh_.interior();

  std::vector<double> gap(n);
  for (std::size_t i = 0; i < n; ++i) gap[i] = s.phi[i] - s.u[i];

  const auto m_xi = mass_.apply(s.xi.coefficients());
  const auto s_u = stiffness_.apply(s.u.coefficients());
  const auto m_gap = mass_.apply(gap);
  const auto m_Phi = mass_.apply(s.Phi.coefficients());
  const auto s_phi = stiffness_.apply(s.phi.coefficients());
  const auto g_phi = gradient_.apply(s.phi.coefficients());
  const auto m_vt = mass_.apply(s.vartheta.coefficients());
  const auto s_w = stiffness_.apply(s.w.coefficients());

  std::vector<double> b(kFieldsPerNode * n);
  for (std::size_t i = 0; i < n; ++i) {
    b[index(i, Field::Xi)] = p.rho / dt_ * m_xi[i] - p.alpha * s_u[i] + p.lambda * m_gap[i];
    b[index(i, Field::Phi)] = p.rho1 / dt_ * m_Phi[i] - p.K * s_phi[i] - p.lambda * m_gap[i];
    b[index(i, Field::Psi)] = -p.K * g_phi[i];
    b[index(i, Field::Vartheta)] = p.rho3 / dt_ * m_vt[i] - p.delta * s_w[i];
  }
  if (loads != nullptr) {
    for (std::size_t f = 0; f < kFieldsPerNode; ++f) {
      const auto& load = (*loads)[f];
      for (std::size_t i = 0; i < n; ++i) b[index(i, static_cast<Field>(f))] += load[i];
    }
  }
  return b;
}

std::vector<double> BlockSystem::solve(std::span<const double> rhs) const {
  std::vector<double> x = lu_->solve(rhs);
  const auto ax = matrix_.apply(x);
  double r = 0.0, xn = 0.0, bn = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r = std::max(r, std::abs(ax[i] - rhs[i]));
    xn = std::max(xn, std::abs(x[i]));
    bn = std::max(bn, std::abs(rhs[i]));
  }
  const double scale = matrix_norm_ * xn + bn;
  const double relative = scale > 0.0 ? r / scale : 0.0;
  if (!(relative <= kResidualTolerance)) {
    throw SolverFailure("linear solve residual " + std::to_string(relative) +
                            " exceeds tolerance",
                        relative);
  }
  return x;
}

BlockSystem assemble(const PhysicalParams& params, const UniformMesh& mesh, double dt) {
  return BlockSystem(params, mesh, dt);
}

std::array<std::vector<double>, 4> evaluate_loads(const SourceTerms& sources, double t,
                                                  const UniformMesh& mesh) {
  return {load_vector(sources.f1, t, mesh), load_vector(sources.f2, t, mesh),
          load_vector(sources.f3, t, mesh), load_vector(sources.f4, t, mesh)};
}

State advance(const BlockSystem& sys, const State& s, const std::optional<SourceTerms>& sources) {
  const double dt = sys.dt();
  // t = t0 + n dt without accumulated rounding
  const double t0 = s.t - static_cast<double>(s.n) * dt;
  const double t_new = t0 + static_cast<double>(s.n + 1) * dt;

  std::vector<double> b;
  if (sources) {
    const auto loads = evaluate_loads(*sources, t_new, sys.mesh());
    b = sys.rhs(s, &loads);
  } else {
    b = sys.rhs(s, nullptr);
  }
  const auto x = sys.solve(b);

  State next(sys.mesh());
  const std::size_t n = sys.mesh().interior();
  for (std::size_t i = 0; i < n; ++i) {
    next.xi[i] = x[BlockSystem::index(i, Field::Xi)];
    next.Phi[i] = x[BlockSystem::index(i, Field::Phi)];
    next.psi[i] = x[BlockSystem::index(i, Field::Psi)];
    next.vartheta[i] = x[BlockSystem::index(i, Field::Vartheta)];
    next.u[i] = s.u[i] + dt * next.xi[i];
    next.phi[i] = s.phi[i] + dt * next.Phi[i];
    next.w[i] = s.w[i] + dt * next.vartheta[i];
  }
  next.n = s.n + 1;
  next.t = t_new;
  return next;
}

RunResult run(const ValidatedConfig& cfg, const InitialData& init,
              const std::optional<SourceTerms>& sources, std::span<Observer* const> observers) {
  const UniformMesh mesh(cfg.config.M, cfg.params.L);
  const BlockSystem sys(cfg.params, mesh, cfg.config.dt);

  State s = initial_state(init, mesh);
  for (auto* o : observers) o->observe(s);
  for (long step = 1; step <= cfg.steps; ++step) {
    try {
      s = advance(sys, s, sources);
    } catch (const SolverFailure& e) {
      throw SolverFailure("step " + std::to_string(step) + ": " + e.what(), e.residual());
    }
    for (auto* o : observers) o->observe(s);
  }
  return RunResult{std::move(s), cfg.steps};
}

}  // namespace shearbeam
