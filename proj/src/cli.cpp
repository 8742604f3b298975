// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "shearbeam/csv_io.hpp"
#include "shearbeam/energy.hpp"
#include "shearbeam/mms.hpp"
#include "shearbeam/model.hpp"
#include "shearbeam/stepper.hpp"
#include "shearbeam/transform.hpp"

namespace shearbeam::cli {

namespace {

std::filesystem::path resolve_output_dir(const CLI::Option* flag, const std::string& flag_value,
                                         const std::filesystem::path& configured) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return configured;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_double_list(text)) {
    if (v != std::floor(v) || v < 1 || v > 1e7) throw ConfigError("bad level '" + format_double(v) + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct SimulateArgs {
  std::string config;
  std::map<std::string, std::string> overrides;
  std::map<std::string, CLI::Option*> override_opts;
  std::string sources = "none";
};

int do_simulate(const SimulateArgs& a, std::ostream& out) {
  PhysicalParams params = reference_params();
  SimulationConfig config;
  if (!a.config.empty()) load_config_file(a.config, params, config);
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    config.output_dir = env;
  }
  for (const auto& [key, opt] : a.override_opts) {
    if (opt->count() > 0) apply_setting(params, config, key, a.overrides.at(key));
  }

  std::optional<ManufacturedCase> mms;
  if (a.sources == "mms") mms = paper_case(params);
  else if (a.sources != "none") throw ConfigError("unknown source case '" + a.sources + "'");

  const ValidatedConfig vc = validate(params, config);
  const InitialData init = mms ? mms->initial_data() : reference_initial_data(params.L);

  EnergyRecorder energy(vc.params);
  ProbeRecorder probes(vc.config.probe_points);
  SnapshotRecorder snapshots(vc.config.snapshot_stride, vc.steps);
  Observer* observers[] = {&energy, &probes, &snapshots};
  const RunResult result =
      run(vc, init, mms ? std::optional<SourceTerms>(mms->sources) : std::nullopt, observers);

  const auto& dir = vc.config.output_dir;
  write_file_atomic(dir / "energy.csv", energy_csv(energy.series()));
  for (std::size_t k = 0; k < probes.points().size(); ++k) {
    write_file_atomic(dir / probe_file_name(k, probes.points()[k]), probe_csv(probes.rows(k)));
  }
  write_file_atomic(dir / "snapshots.csv", snapshots.csv());

  const auto monotone = check_monotone(energy.series(), 1e-9);
  out << "steps=" << result.steps << " T=" << format_double(vc.config.T)
      << " E0=" << format_double(energy.series()[0].E)
      << " Efinal=" << format_double(energy.series().back().E)
      << " monotone=" << (monotone.passed() ? "yes" : "no");
  if (mms) out << " error=" << format_double(error_norm(result.final_state, *mms, result.final_state.t));
  out << " output=" << dir.string() << '\n';
  return kExitOk;
}

struct ConvergenceArgs {
  std::string config;
  std::string levels = "40,80,160,320,640,1280";
  double T = 1.2;
  std::string dt_rule = "c/M";
  double c = 0.04;
  unsigned jobs = default_jobs();
  std::string output_dir;
  CLI::Option* output_opt = nullptr;
};

int do_convergence(const ConvergenceArgs& a, std::ostream& out) {
  PhysicalParams params = reference_params();
  SimulationConfig config;
  if (!a.config.empty()) load_config_file(a.config, params, config);
  if (a.dt_rule != "c/M") throw ConfigError("unsupported dt rule '" + a.dt_rule + "'");
  if (!(a.c > 0.0)) throw InvalidTimeStep("c");
  if (a.jobs < 1) throw InvalidSetting("jobs");

  const auto levels = levels_from_rule(parse_int_list(a.levels), a.c);
  const auto rows = convergence_table(paper_case(params), levels, a.T, a.jobs);

  const auto dir = resolve_output_dir(a.output_opt, a.output_dir, config.output_dir);
  write_file_atomic(dir / "convergence.csv", convergence_csv(rows));
  write_file_atomic(dir / "convergence_loglog.csv", loglog_csv(rows, params.L));
  out << convergence_csv(rows);
  if (rows.size() >= 2) out << "loglog_slope=" << format_double(loglog_slope(rows, params.L)) << '\n';
  return kExitOk;
}

struct EnergyArgs {
  std::string input;
  std::string window;
  std::string output;
};

int do_energy(const EnergyArgs& a, std::ostream& out) {
  const EnergySeries series = read_energy_csv(a.input);
  if (series.empty()) throw ConfigError(a.input + ": no samples");
  TimeWindow window = default_fit_window(series);
  if (!a.window.empty()) {
    const auto w = parse_double_list(a.window);
    if (w.size() != 2 || !(w[0] < w[1])) throw ConfigError("--window expects 'begin,end'");
    window = {w[0], w[1]};
  }
  const DecaySummary summary = fit_decay(series, window);
  const MonotoneReport monotone = check_monotone(series, 1e-9);
  std::string report = decay_summary_csv(summary);
  report += "monotone_violations," + std::to_string(monotone.violations.size()) + '\n';
  if (a.output.empty()) out << report;
  else write_file_atomic(a.output, report);
  return kExitOk;
}

struct EtaArgs {
  std::string levels = "20,40,80,160";
};

int do_eta_check(const EtaArgs& a, std::ostream& out) {
  const PhysicalParams p = reference_params();
  const double pi = std::numbers::pi;
  const SpatialFunction zero = [](double) { return 0.0; };
  const SpatialFunction sine = [pi](double x) { return std::sin(pi * x); };

  std::vector<double> err_sine, err_cancel;
  const auto Ms = parse_int_list(a.levels);
  double zero_max = 0.0;
  for (int M : Ms) {
    const UniformMesh mesh(M, 1.0);
    const auto z = solve_eta(EtaProblem::from_functions({zero, zero}, zero, p, mesh));
    for (double v : z.coefficients()) zero_max = std::max(zero_max, std::abs(v));

    const ThermalData manufactured{zero, [&](double x) { return -(p.delta / p.rho3) * pi * pi * sine(x); }};
    err_sine.push_back(l2_error(solve_eta(EtaProblem::from_functions(manufactured, zero, p, mesh)), sine));

    const ThermalData cancelling{sine, [&](double x) { return -(p.kappa / p.rho3) * pi * pi * sine(x); }};
    err_cancel.push_back(l2_error(solve_eta(EtaProblem::from_functions(cancelling, zero, p, mesh)), zero));
  }

  out << "M,error_sine,order_sine,norm_cancelling,order_cancelling\n";
  for (std::size_t i = 0; i < Ms.size(); ++i) {
    out << Ms[i] << ',' << format_double(err_sine[i]) << ',';
    if (i > 0) out << format_double(std::log(err_sine[i - 1] / err_sine[i]) / std::log(double(Ms[i]) / Ms[i - 1]));
    out << ',' << format_double(err_cancel[i]) << ',';
    if (i > 0) out << format_double(std::log(err_cancel[i - 1] / err_cancel[i]) / std::log(double(Ms[i]) / Ms[i - 1]));
    out << '\n';
  }
  out << "zero_case_max_abs=" << format_double(zero_max) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shear beam with suspenders, type III thermoelasticity: P1 / implicit Euler solver"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run one simulation and write energy, probe and snapshot CSVs");
  simulate->add_option("--config", sim.config, "key = value configuration file");
  for (const auto& key : config_keys()) {
    sim.override_opts[key] = simulate->add_option("--" + key, sim.overrides[key], "Override config key '" + key + "'");
  }
  simulate->add_option("--sources", sim.sources, "Source terms: none | mms")->capture_default_str();

  ConvergenceArgs conv;
  auto* convergence = app.add_subcommand("convergence", "Manufactured-solution convergence study");
  convergence->add_option("--config", conv.config, "Configuration file for the physical parameters");
  convergence->add_option("--levels", conv.levels, "Comma-separated element counts")->capture_default_str();
  convergence->add_option("--T", conv.T, "Final time")->capture_default_str();
  convergence->add_option("--dt-rule", conv.dt_rule, "Time step rule (c/M)")->capture_default_str();
  convergence->add_option("--c", conv.c, "Constant of the dt rule")->capture_default_str();
  convergence->add_option("--jobs", conv.jobs, "Maximum concurrent levels")->capture_default_str();
  conv.output_opt = convergence->add_option("--output_dir", conv.output_dir, "Output directory");

  EnergyArgs en;
  auto* energy = app.add_subcommand("energy", "Decay fit and monotonicity report for an energy CSV");
  energy->add_option("--input", en.input, "Energy CSV")->required();
  energy->add_option("--window", en.window, "Fit window 'begin,end' (default: second half)");
  energy->add_option("--output", en.output, "Report file (default: stdout)");

  EtaArgs eta;
  auto* eta_check = app.add_subcommand("eta-check", "Manufactured checks of the eta pre-solve");
  eta_check->add_option("--levels", eta.levels, "Comma-separated element counts")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ConfigError: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (simulate->parsed()) return do_simulate(sim, out);
    if (convergence->parsed()) return do_convergence(conv, out);
    if (energy->parsed()) return do_energy(en, out);
    return do_eta_check(eta, out);
  } catch (const ConfigError& e) {
    err << "ConfigError: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DegenerateWindow& e) {
    err << "ConfigError: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "IoError: " << e.what() << '\n';
    return kExitIo;
  } catch (const SolverFailure& e) {
    err << "SolverFailure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "IoError: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "Error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace shearbeam::cli
