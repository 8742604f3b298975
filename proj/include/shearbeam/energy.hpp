// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "shearbeam/model.hpp"
#include "shearbeam/stepper.hpp"

namespace shearbeam {

/// E^n = 1/2 (rho|xi|^2 + alpha|u_x|^2 + lambda|phi - u|^2 + rho1|Phi|^2
///            + K|phi_x + psi|^2 + b|psi_x|^2 + rho3|vartheta|^2 + delta|w_x|^2).
/// Every term is integrated exactly; |phi_x + psi|^2 is accumulated element by
/// element rather than through the expanded quadratic forms.
double discrete_energy(const State& s, const PhysicalParams& params);

struct EnergySample {
  long n;
  double t;
  double E;
};

/// Time levels and energies; t strictly increasing, E nonnegative.
class EnergySeries {
 public:
  EnergySeries() = default;
  explicit EnergySeries(std::vector<EnergySample> samples);

  /// Throws Error if t does not increase or E is negative.
  void push_back(const EnergySample& s);
  const std::vector<EnergySample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  const EnergySample& operator[](std::size_t i) const { return samples_[i]; }
  const EnergySample& back() const { return samples_.back(); }

 private:
  std::vector<EnergySample> samples_;
};

/// Records the discrete energy at every observed level.
class EnergyRecorder : public Observer {
 public:
  explicit EnergyRecorder(PhysicalParams params) : params_(params) {}
  void observe(const State& s) override;
  const EnergySeries& series() const noexcept { return series_; }

 private:
  PhysicalParams params_;
  EnergySeries series_;
};

struct MonotoneReport {
  /// Positions k in the series with E_k > E_{k-1} (1 + tol_rel).
  std::vector<std::size_t> violations;
  double worst_relative_increase = 0.0;
  bool passed() const noexcept { return violations.empty(); }
};

MonotoneReport check_monotone(const EnergySeries& series, double tol_rel);

struct TimeWindow {
  double begin;
  double end;
};

struct DecaySummary {
  double sigma1_hat;    ///< fitted decay rate, log E ~ log sigma0 - sigma1 t
  double sigma0_hat;    ///< fitted prefactor
  TimeWindow fit_window;
  /// max |log E - fit| over the window divided by max |log E| over the window
  double fit_residual;
  std::size_t samples;
};

/// Least-squares affine fit of log E against t over samples with t in the
/// window (inclusive). Throws DegenerateWindow with fewer than 3 samples and
/// Error if some E in the window is not positive.
DecaySummary fit_decay(const EnergySeries& series, TimeWindow window);

/// Second half of the run, [t_last / 2, t_last].
TimeWindow default_fit_window(const EnergySeries& series);

/// -log(E^n) / t_n for every sample; empty optional at t = 0 or E = 0.
std::vector<std::optional<double>> neg_log_energy_over_t(const EnergySeries& series);

}  // namespace shearbeam
