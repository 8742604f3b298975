// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <utility>

namespace shearbeam {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("cannot parse value '" + std::string(text) + "' for key '" +
                      std::string(key) + "'");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("cannot parse integer '" + std::string(text) + "' for key '" +
                      std::string(key) + "'");
  }
  return value;
}

}  // namespace

PhysicalParams reference_params() {
  PhysicalParams p;
  p.alpha = 6.0;
  p.rho1 = 2.0;
  p.K = 365.0;
  return p;
}

ValidatedConfig validate(const PhysicalParams& params, const SimulationConfig& config) {
  const std::pair<const char*, double> fields[] = {
      {"rho", params.rho},     {"alpha", params.alpha}, {"lambda", params.lambda},
      {"mu", params.mu},       {"rho1", params.rho1},   {"K", params.K},
      {"gamma", params.gamma}, {"beta", params.beta},   {"b", params.b},
      {"rho3", params.rho3},   {"delta", params.delta}, {"kappa", params.kappa},
      {"L", params.L},
  };
  for (const auto& [name, value] : fields) {
    // also rejects NaN
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw NonPositiveParameter(name, "value " + std::to_string(value));
    }
  }

  if (config.M < 2) throw InvalidMesh("M", "need at least 2 elements, got " + std::to_string(config.M));
  if (!(config.dt > 0.0) || !std::isfinite(config.dt)) throw InvalidTimeStep("dt");
  if (!(config.T > 0.0) || !std::isfinite(config.T)) throw InvalidTimeStep("T");
  const double ratio = config.T / config.dt;
  if (ratio > 1e12) throw InvalidTimeStep("T", "too many steps");
  const long steps = std::lround(ratio);
  if (steps < 1) throw InvalidTimeStep("dt", "time step exceeds twice the final time");

  for (double x : config.probe_points) {
    if (!(x > 0.0 && x < params.L)) {
      throw InvalidSetting("probes", "probe " + std::to_string(x) + " outside (0, L)");
    }
  }
  if (config.snapshot_stride < 1) throw InvalidSetting("snapshot_stride");

  ValidatedConfig out{params, config, steps};
  out.config.T = static_cast<double>(steps) * config.dt;
  return out;
}

InitialData reference_initial_data(double L) {
  const SpatialFunction s = [L](double x) { return std::sin(std::numbers::pi * x / L); };
  return {s, s, s, s, s, s, s};
}

namespace {

void check_one(const SpatialFunction& f, const char* name, double L, double tol) {
  if (!f) throw InvalidSetting(name, "function not provided");
  if (std::abs(f(0.0)) > tol || std::abs(f(L)) > tol) {
    throw InvalidSetting(name, "must vanish at x = 0 and x = L");
  }
}

}  // namespace

void check_boundary_compatibility(const InitialData& init, double L, double tol) {
  check_one(init.u0, "u0", L, tol);
  check_one(init.u1, "u1", L, tol);
  check_one(init.phi0, "phi0", L, tol);
  check_one(init.phi1, "phi1", L, tol);
  check_one(init.psi0, "psi0", L, tol);
  check_one(init.w0, "w0", L, tol);
  check_one(init.w1, "w1", L, tol);
}

void check_boundary_compatibility(const ThermalData& data, double L, double tol) {
  check_one(data.theta0, "theta0", L, tol);
  check_one(data.theta1, "theta1", L, tol);
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "rho",  "alpha", "lambda", "mu", "rho1", "K",      "gamma",           "beta",      "b",   "rho3",
      "delta", "kappa", "L",     "M",  "dt",   "T",      "probes", "snapshot_stride", "output_dir"};
  return keys;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_double("probes", text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void apply_setting(PhysicalParams& p, SimulationConfig& c, std::string_view key,
                   std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "rho") p.rho = parse_double(key, value);
  else if (key == "alpha") p.alpha = parse_double(key, value);
  else if (key == "lambda") p.lambda = parse_double(key, value);
  else if (key == "mu") p.mu = parse_double(key, value);
  else if (key == "rho1") p.rho1 = parse_double(key, value);
  else if (key == "K") p.K = parse_double(key, value);
  else if (key == "gamma") p.gamma = parse_double(key, value);
  else if (key == "beta") p.beta = parse_double(key, value);
  else if (key == "b") p.b = parse_double(key, value);
  else if (key == "rho3") p.rho3 = parse_double(key, value);
  else if (key == "delta") p.delta = parse_double(key, value);
  else if (key == "kappa") p.kappa = parse_double(key, value);
  else if (key == "L") p.L = parse_double(key, value);
  else if (key == "M") c.M = parse_int(key, value);
  else if (key == "dt") c.dt = parse_double(key, value);
  else if (key == "T") c.T = parse_double(key, value);
  else if (key == "probes") c.probe_points = parse_double_list(value);
  else if (key == "snapshot_stride") c.snapshot_stride = parse_int(key, value);
  else if (key == "output_dir") c.output_dir = std::string(value);
  else throw ConfigError("unknown key '" + std::string(key) + "'");
}

void load_config_file(const std::filesystem::path& path, PhysicalParams& params,
                      SimulationConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    try {
      apply_setting(params, config, body.substr(0, eq), body.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace shearbeam
