// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "shearbeam/energy.hpp"
#include "shearbeam/mms.hpp"
#include "shearbeam/stepper.hpp"

namespace shearbeam {

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// Writes to `path.tmp` and renames over `path`. Creates parent directories.
/// Throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Samples u, phi, psi, w at fixed points inside (0, L) at every level.
class ProbeRecorder : public Observer {
 public:
  struct Row {
    double t, u, phi, psi, w;
  };

  explicit ProbeRecorder(std::vector<double> points);
  void observe(const State& s) override;

  const std::vector<double>& points() const noexcept { return points_; }
  const std::vector<Row>& rows(std::size_t probe) const { return rows_.at(probe); }

 private:
  std::vector<double> points_;
  std::vector<std::vector<Row>> rows_;
};

/// Keeps full nodal profiles of u, phi, psi, w every `stride` levels, plus the last level.
class SnapshotRecorder : public Observer {
 public:
  SnapshotRecorder(int stride, long last_step);
  void observe(const State& s) override;
  /// Header `x,t,u,phi,psi,w`, one row per node (boundary nodes included) per snapshot.
  const std::string& csv() const noexcept { return csv_; }

 private:
  int stride_;
  long last_step_;
  std::string csv_;
};

/// Header `n,t,E,logE,negLogEOverT`; the last column is `nan` at t = 0.
std::string energy_csv(const EnergySeries& series);
/// Header `t,u,phi,psi,w`.
std::string probe_csv(const std::vector<ProbeRecorder::Row>& rows);
/// File name for probe k at x, e.g. `probe_0_x0.6.csv`.
std::string probe_file_name(std::size_t k, double x);

/// Reads the n, t and E columns of an energy CSV. Throws IoError if unreadable
/// and ConfigError if malformed.
EnergySeries read_energy_csv(const std::filesystem::path& path);

/// Plain `key,value` report.
std::string decay_summary_csv(const DecaySummary& d);

/// Header `M,dt,error,ratio,order`; ratio and order are empty on the first row.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
/// Header `h_plus_dt,error`.
std::string loglog_csv(const std::vector<ConvergenceRow>& rows, double L = 1.0);

}  // namespace shearbeam
