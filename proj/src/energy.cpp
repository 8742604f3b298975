// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shearbeam {

namespace {

// Integral over an element of length h of the square of the affine function
// with end values l and r.
double affine_square(double l, double r, double h) { return h * (l * l + l * r + r * r) / 3.0; }

}  // namespace

double discrete_energy(const State& s, const PhysicalParams& p) {
  const UniformMesh& mesh = s.mesh();
  const double h = mesh.h();
  double kinetic = 0.0;
  double strain = 0.0;
  for (int e = 0; e < mesh.elements(); ++e) {
    const int a = e;
    const int b = e + 1;
    const double ux = s.u.slope(e);
    const double phix = s.phi.slope(e);
    const double psix = s.psi.slope(e);
    const double wx = s.w.slope(e);

    kinetic += p.rho * affine_square(s.xi.nodal(a), s.xi.nodal(b), h) +
               p.rho1 * affine_square(s.Phi.nodal(a), s.Phi.nodal(b), h) +
               p.rho3 * affine_square(s.vartheta.nodal(a), s.vartheta.nodal(b), h);

    const double gap_l = s.phi.nodal(a) - s.u.nodal(a);
    const double gap_r = s.phi.nodal(b) - s.u.nodal(b);
    const double shear_l = phix + s.psi.nodal(a);
    const double shear_r = phix + s.psi.nodal(b);
    strain += h * (p.alpha * ux * ux + p.b * psix * psix + p.delta * wx * wx) +
              p.lambda * affine_square(gap_l, gap_r, h) +
              p.K * affine_square(shear_l, shear_r, h);
  }
  return 0.5 * (kinetic + strain);
}

EnergySeries::EnergySeries(std::vector<EnergySample> samples) {
  samples_.reserve(samples.size());
  for (const auto& s : samples) push_back(s);
}

void EnergySeries::push_back(const EnergySample& s) {
  if (!samples_.empty() && !(s.t > samples_.back().t)) {
    throw Error("energy series times must increase strictly (n = " + std::to_string(s.n) + ")");
  }
  if (!(s.E >= 0.0)) throw Error("energy must be nonnegative (n = " + std::to_string(s.n) + ")");
  samples_.push_back(s);
}

void EnergyRecorder::observe(const State& s) {
  series_.push_back({s.n, s.t, discrete_energy(s, params_)});
}

MonotoneReport check_monotone(const EnergySeries& series, double tol_rel) {
  MonotoneReport report;
  for (std::size_t k = 1; k < series.size(); ++k) {
    const double prev = series[k - 1].E;
    const double cur = series[k].E;
    if (cur > prev * (1.0 + tol_rel)) report.violations.push_back(k);
    if (prev > 0.0) {
      report.worst_relative_increase = std::max(report.worst_relative_increase, (cur - prev) / prev);
    }
  }
  return report;
}

DecaySummary fit_decay(const EnergySeries& series, TimeWindow window) {
  std::vector<double> ts, ys;
  for (const auto& s : series.samples()) {
    if (s.t < window.begin || s.t > window.end) continue;
    if (!(s.E > 0.0)) throw Error("energy must be positive inside the fit window");
    ts.push_back(s.t);
    ys.push_back(std::log(s.E));
  }
  if (ts.size() < 3) {
    throw DegenerateWindow("fit window [" + std::to_string(window.begin) + ", " +
                           std::to_string(window.end) + "] holds " + std::to_string(ts.size()) +
                           " samples, need at least 3");
  }

  const double m = static_cast<double>(ts.size());
  double tbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    tbar += ts[i];
    ybar += ys[i];
  }
  tbar /= m;
  ybar /= m;
  double stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    stt += (ts[i] - tbar) * (ts[i] - tbar);
    sty += (ts[i] - tbar) * (ys[i] - ybar);
  }
  const double slope = sty / stt;
  const double intercept = ybar - slope * tbar;

  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    worst = std::max(worst, std::abs(ys[i] - (intercept + slope * ts[i])));
    scale = std::max(scale, std::abs(ys[i]));
  }
  const double residual = scale > 0.0 ? worst / scale : 0.0;

  return DecaySummary{-slope + 0.0, std::exp(intercept), window, residual, ts.size()};
}

TimeWindow default_fit_window(const EnergySeries& series) {
  if (series.empty()) throw DegenerateWindow("empty energy series");
  const double t_end = series.back().t;
  return {0.5 * t_end, t_end};
}

std::vector<std::optional<double>> neg_log_energy_over_t(const EnergySeries& series) {
  std::vector<std::optional<double>> out;
  out.reserve(series.size());
  for (const auto& s : series.samples()) {
    if (s.t > 0.0 && s.E > 0.0) out.emplace_back(-std::log(s.E) / s.t);
    else out.emplace_back(std::nullopt);
  }
  return out;
}

}  // namespace shearbeam
