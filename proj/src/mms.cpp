// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/mms.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

namespace shearbeam {

namespace {

constexpr double kPi = std::numbers::pi;

// p(x) = x^2 (x - 1)^2 and its derivatives
double p0(double x) { return x * x * (x - 1.0) * (x - 1.0); }
double p1(double x) { return 4.0 * x * x * x - 6.0 * x * x + 2.0 * x; }
double p2(double x) { return 12.0 * x * x - 12.0 * x + 2.0; }

// q(x) = x cos(pi x / 2) and its derivatives
double q0(double x) { return x * std::cos(0.5 * kPi * x); }
double q1(double x) { return std::cos(0.5 * kPi * x) - 0.5 * kPi * x * std::sin(0.5 * kPi * x); }
double q2(double x) {
  return -kPi * std::sin(0.5 * kPi * x) - 0.25 * kPi * kPi * x * std::cos(0.5 * kPi * x);
}

}  // namespace

InitialData ManufacturedCase::initial_data() const {
  auto at0 = [](SpaceTimeFunction f) { return [f = std::move(f)](double x) { return f(x, 0.0); }; };
  return InitialData{at0(u), at0(xi), at0(phi), at0(Phi), at0(psi), at0(w), at0(vartheta)};
}

ManufacturedCase paper_case(const PhysicalParams& params) {
  if (params.L != 1.0) throw InvalidSetting("L", "the manufactured case is posed on (0, 1)");
  ManufacturedCase c;
  c.params = params;
  const PhysicalParams p = params;

  c.u = [](double x, double t) { return 0.01 * t * p0(x); };
  c.u_x = [](double x, double t) { return 0.01 * t * p1(x); };
  c.xi = [](double x, double) { return 0.01 * p0(x); };

  c.phi = [](double x, double t) { return std::exp(t) * std::sin(kPi * x); };
  c.phi_x = [](double x, double t) { return kPi * std::exp(t) * std::cos(kPi * x); };
  c.Phi = c.phi;

  c.psi = [](double x, double t) { return std::exp(t) * q0(x); };
  c.psi_x = [](double x, double t) { return std::exp(t) * q1(x); };

  c.w = [](double x, double t) { return 2.0 * std::exp(t) * std::sin(kPi * x); };
  c.w_x = [](double x, double t) { return 2.0 * kPi * std::exp(t) * std::cos(kPi * x); };
  c.vartheta = c.w;

  // u_tt = 0, u_xx = 0.01 t p''
  c.sources.f1 = [p](double x, double t) {
    const double gap = std::exp(t) * std::sin(kPi * x) - 0.01 * t * p0(x);
    return -p.alpha * 0.01 * t * p2(x) - p.lambda * gap + p.mu * 0.01 * p0(x);
  };
  // phi_tt = phi_t = e^t sin, (phi_x + psi)_x = e^t (-pi^2 sin + q'), w_xt = 2 pi e^t cos
  c.sources.f2 = [p](double x, double t) {
    const double et = std::exp(t);
    const double s = std::sin(kPi * x);
    const double gap = et * s - 0.01 * t * p0(x);
    return (p.rho1 + p.gamma) * et * s - p.K * et * (-kPi * kPi * s + q1(x)) + p.lambda * gap +
           p.beta * 2.0 * kPi * et * std::cos(kPi * x);
  };
  // psi_xx = e^t q'', phi_x + psi = e^t (pi cos + q)
  c.sources.f3 = [p](double x, double t) {
    const double et = std::exp(t);
    return -p.b * et * q2(x) + p.K * et * (kPi * std::cos(kPi * x) + q0(x));
  };
  // w_tt = 2 e^t sin, w_xx = w_xxt = -2 pi^2 e^t sin, phi_xt = pi e^t cos
  c.sources.f4 = [p](double x, double t) {
    const double et = std::exp(t);
    const double s = std::sin(kPi * x);
    return 2.0 * p.rho3 * et * s + 2.0 * kPi * kPi * (p.delta + p.kappa) * et * s +
           p.beta * kPi * et * std::cos(kPi * x);
  };
  return c;
}

double error_norm(const State& s, const ManufacturedCase& c, double t) {
  const auto& g = gauss3();
  const UniformMesh& mesh = s.mesh();
  const double h = mesh.h();
  double acc = 0.0;
  for (int e = 0; e < mesh.elements(); ++e) {
    const double ux = s.u.slope(e);
    const double phix = s.phi.slope(e);
    const double psix = s.psi.slope(e);
    const double wx = s.w.slope(e);
    auto lerp = [e](const FeFunction& f, double r) {
      return (1.0 - r) * f.nodal(e) + r * f.nodal(e + 1);
    };
    for (int q = 0; q < 3; ++q) {
      const double r = g.points[q];
      const double x = mesh.node(e) + r * h;
      const double u_h = lerp(s.u, r);
      const double phi_h = lerp(s.phi, r);
      const double psi_h = lerp(s.psi, r);

      const double d_xi = lerp(s.xi, r) - c.xi(x, t);
      const double d_ux = ux - c.u_x(x, t);
      const double d_gap = (phi_h - u_h) - (c.phi(x, t) - c.u(x, t));
      const double d_Phi = lerp(s.Phi, r) - c.Phi(x, t);
      const double d_shear = (phix + psi_h) - (c.phi_x(x, t) + c.psi(x, t));
      const double d_psix = psix - c.psi_x(x, t);
      const double d_vt = lerp(s.vartheta, r) - c.vartheta(x, t);
      const double d_wx = wx - c.w_x(x, t);

      const double sum = d_xi * d_xi + d_ux * d_ux + d_gap * d_gap + d_Phi * d_Phi +
                         d_shear * d_shear + d_psix * d_psix + d_vt * d_vt + d_wx * d_wx;
      acc += g.weights[q] * h * sum;
    }
  }
  return std::sqrt(acc);
}

std::vector<ConvergenceLevel> levels_from_rule(const std::vector<int>& Ms, double c) {
  std::vector<ConvergenceLevel> out;
  out.reserve(Ms.size());
  for (int M : Ms) out.push_back({M, c / M});
  return out;
}

std::vector<ConvergenceLevel> reference_levels() {
  return levels_from_rule({40, 80, 160, 320, 640, 1280}, 0.04);
}

namespace {

ConvergenceRow run_level(const ManufacturedCase& c, const ConvergenceLevel& level, double T) {
  SimulationConfig cfg;
  cfg.M = level.M;
  cfg.dt = level.dt;
  cfg.T = T;
  cfg.probe_points.clear();
  const ValidatedConfig vc = validate(c.params, cfg);
  const RunResult result = run(vc, c.initial_data(), c.sources, {});
  const double err = error_norm(result.final_state, c, result.final_state.t);
  return ConvergenceRow{level.M, level.dt, err, std::nullopt, std::nullopt, result.steps};
}

}  // namespace

std::vector<ConvergenceRow> convergence_table(const ManufacturedCase& c,
                                              const std::vector<ConvergenceLevel>& levels,
                                              double T, unsigned jobs) {
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].M < levels[i - 1].M) throw ConfigError("convergence levels must be sorted by M");
  }
  std::vector<std::optional<ConvergenceRow>> rows(levels.size());
  std::vector<std::exception_ptr> failures(levels.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < levels.size(); i = next++) {
      try {
        rows[i] = run_level(c, levels[i], T);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(levels.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(worker);
  }

  std::vector<ConvergenceRow> out;
  out.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (failures[i]) {
      const std::string tag = "level M=" + std::to_string(levels[i].M) + ": ";
      try {
        std::rethrow_exception(failures[i]);
      } catch (const SolverFailure& e) {
        throw SolverFailure(tag + e.what(), e.residual());
      } catch (const ConfigError& e) {
        throw ConfigError(tag + e.what());
      }
    }
    ConvergenceRow row = *rows[i];
    if (!out.empty()) {
      row.ratio = out.back().error / row.error;
      row.observed_order = std::log2(*row.ratio);
    }
    out.push_back(row);
  }
  return out;
}

double loglog_slope(const std::vector<ConvergenceRow>& rows, double L) {
  if (rows.size() < 2) throw Error("need at least two levels for a slope");
  double xbar = 0.0, ybar = 0.0;
  for (const auto& r : rows) {
    xbar += std::log(L / r.M + r.dt);
    ybar += std::log(r.error);
  }
  xbar /= static_cast<double>(rows.size());
  ybar /= static_cast<double>(rows.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : rows) {
    const double dx = std::log(L / r.M + r.dt) - xbar;
    sxx += dx * dx;
    sxy += dx * (std::log(r.error) - ybar);
  }
  return sxy / sxx;
}

}  // namespace shearbeam
