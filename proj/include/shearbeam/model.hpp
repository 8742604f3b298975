// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "shearbeam/errors.hpp"

namespace shearbeam {

/// Scalar function of position on [0, L].
using SpatialFunction = std::function<double(double)>;

/// Constitutive constants of the string / shear-beam / type III thermal system,
/// plus the span length. All values are dimensionless and must be positive.
struct PhysicalParams {
  double rho = 1.0;      ///< cable mass density
  double alpha = 1.0;    ///< string elastic modulus
  double lambda = 1.0;   ///< suspender stiffness
  double mu = 1.0;       ///< cable damping
  double rho1 = 1.0;     ///< beam mass density
  double K = 1.0;        ///< shear modulus
  double gamma = 1.0;    ///< beam damping
  double beta = 1.0;     ///< thermal coupling
  double b = 1.0;        ///< bending stiffness
  double rho3 = 1.0;     ///< thermal inertia
  double delta = 1.0;    ///< thermal conductivity
  double kappa = 1.0;    ///< type III dissipation
  double L = 1.0;        ///< span length

  bool operator==(const PhysicalParams&) const = default;
};

/// Parameter set used for the reference simulations: alpha = 6, rho1 = 2,
/// K = 365, every other constant 1, L = 1.
PhysicalParams reference_params();

struct SimulationConfig {
  int M = 100;                          ///< element count
  double dt = 0.005;                    ///< time step
  double T = 10.0;                      ///< final time
  std::vector<double> probe_points{0.6};
  int snapshot_stride = 20;
  std::filesystem::path output_dir = "out";

  bool operator==(const SimulationConfig&) const = default;
};

/// Parameters and configuration that passed validate(). T is redefined as
/// steps * dt so the last report time is exact.
struct ValidatedConfig {
  PhysicalParams params;
  SimulationConfig config;
  long steps = 0;

  double h() const { return params.L / config.M; }
  bool operator==(const ValidatedConfig&) const = default;
};

/// Checks every invariant; throws NonPositiveParameter, InvalidMesh,
/// InvalidTimeStep or InvalidSetting naming the offending field.
ValidatedConfig validate(const PhysicalParams& params, const SimulationConfig& config);

/// Initial data of the w-formulation. Every function must vanish at 0 and L.
struct InitialData {
  SpatialFunction u0, u1, phi0, phi1, psi0, w0, w1;
};

/// Temperature data of the original formulation, converted by the transform module.
struct ThermalData {
  SpatialFunction theta0, theta1;
};

/// sin(pi x / L) for all seven fields.
InitialData reference_initial_data(double L);

/// Throws InvalidSetting if any field is missing or does not vanish at x = 0 and x = L.
void check_boundary_compatibility(const InitialData& init, double L, double tol = 1e-12);
void check_boundary_compatibility(const ThermalData& data, double L, double tol = 1e-12);

/// Keys accepted in configuration files, in canonical order.
const std::vector<std::string>& config_keys();

/// Applies one `key = value` setting. Unknown keys and unparsable values throw ConfigError.
void apply_setting(PhysicalParams& params, SimulationConfig& config, std::string_view key,
                   std::string_view value);

/// Reads a `key = value` file on top of the given defaults. Blank lines and
/// lines starting with '#' are ignored. A missing file throws ConfigError
/// whose message is the path.
void load_config_file(const std::filesystem::path& path, PhysicalParams& params,
                      SimulationConfig& config);

std::vector<double> parse_double_list(std::string_view text);

}  // namespace shearbeam
