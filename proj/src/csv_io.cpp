// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace shearbeam {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path().string() + ": " + ec.message());
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(tmp.string() + ": cannot open for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError(tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError(path.string() + ": rename failed");
  }
}

ProbeRecorder::ProbeRecorder(std::vector<double> points)
    : points_(std::move(points)), rows_(points_.size()) {}

void ProbeRecorder::observe(const State& s) {
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const double x = points_[k];
    rows_[k].push_back({s.t, s.u(x), s.phi(x), s.psi(x), s.w(x)});
  }
}

SnapshotRecorder::SnapshotRecorder(int stride, long last_step)
    : stride_(stride), last_step_(last_step) {
  csv_ = "x,t,u,phi,psi,w\n";
}

void SnapshotRecorder::observe(const State& s) {
  if (s.n % stride_ != 0 && s.n != last_step_) return;
  const UniformMesh& mesh = s.mesh();
  const std::string t = format_double(s.t);
  for (int i = 0; i <= mesh.elements(); ++i) {
    csv_ += format_double(mesh.node(i));
    csv_ += ',';
    csv_ += t;
    for (const FeFunction* f : {&s.u, &s.phi, &s.psi, &s.w}) {
      csv_ += ',';
      csv_ += format_double(f->nodal(i));
    }
    csv_ += '\n';
  }
}

std::string energy_csv(const EnergySeries& series) {
  std::string out = "n,t,E,logE,negLogEOverT\n";
  const auto ratio = neg_log_energy_over_t(series);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    out += std::to_string(s.n) + ',' + format_double(s.t) + ',' + format_double(s.E) + ',' +
           format_double(s.E > 0.0 ? std::log(s.E) : -INFINITY) + ',' +
           format_double(ratio[k].value_or(NAN)) + '\n';
  }
  return out;
}

std::string probe_csv(const std::vector<ProbeRecorder::Row>& rows) {
  std::string out = "t,u,phi,psi,w\n";
  for (const auto& r : rows) {
    out += format_double(r.t) + ',' + format_double(r.u) + ',' + format_double(r.phi) + ',' +
           format_double(r.psi) + ',' + format_double(r.w) + '\n';
  }
  return out;
}

std::string probe_file_name(std::size_t k, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "probe_%zu_x%g.csv", k, x);
  return buf;
}

EnergySeries read_energy_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open");
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,t,E", 0) != 0) {
    throw ConfigError(path.string() + ": missing energy CSV header");
  }
  EnergySeries series;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string n, t, e;
    if (!std::getline(row, n, ',') || !std::getline(row, t, ',') || !std::getline(row, e, ',')) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected n,t,E");
    }
    try {
      series.push_back({std::stol(n), std::stod(t), std::stod(e)});
    } catch (const std::logic_error&) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": malformed row");
    } catch (const Error& err) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": " + err.what());
    }
  }
  return series;
}

std::string decay_summary_csv(const DecaySummary& d) {
  std::string out = "key,value\n";
  out += "sigma1_hat," + format_double(d.sigma1_hat) + '\n';
  out += "sigma0_hat," + format_double(d.sigma0_hat) + '\n';
  out += "window_begin," + format_double(d.fit_window.begin) + '\n';
  out += "window_end," + format_double(d.fit_window.end) + '\n';
  out += "fit_residual," + format_double(d.fit_residual) + '\n';
  out += "samples," + std::to_string(d.samples) + '\n';
  return out;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "M,dt,error,ratio,order\n";
  for (const auto& r : rows) {
    out += std::to_string(r.M) + ',' + format_double(r.dt) + ',' + format_double(r.error) + ',' +
           (r.ratio ? format_double(*r.ratio) : "") + ',' +
           (r.observed_order ? format_double(*r.observed_order) : "") + '\n';
  }
  return out;
}

std::string loglog_csv(const std::vector<ConvergenceRow>& rows, double L) {
  std::string out = "h_plus_dt,error\n";
  for (const auto& r : rows) out += format_double(L / r.M + r.dt) + ',' + format_double(r.error) + '\n';
  return out;
}

}  // namespace shearbeam
