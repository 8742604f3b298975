// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "shearbeam/banded.hpp"
#include "shearbeam/femesh.hpp"
#include "shearbeam/model.hpp"

namespace shearbeam {

/// Discrete fields at one time level. Velocities: xi = u_t, Phi = phi_t, vartheta = w_t.
struct State {
  FeFunction u, phi, psi, w;
  FeFunction xi, Phi, vartheta;
  double t = 0.0;
  long n = 0;

  explicit State(const UniformMesh& mesh)
      : u(mesh), phi(mesh), psi(mesh), w(mesh), xi(mesh), Phi(mesh), vartheta(mesh) {}

  const UniformMesh& mesh() const noexcept { return u.mesh(); }
  /// Thermal moment of the original formulation, theta = w_t.
  const FeFunction& theta() const noexcept { return vartheta; }
};

/// Nodal interpolation of the seven initial fields.
State initial_state(const InitialData& init, const UniformMesh& mesh);

/// Difference quotient (psi^n - psi^{n-1}) / dt. psi has no rate unknown.
FeFunction psi_rate(const State& now, const State& previous);

/// Right-hand sides f1..f4 of the forced system, evaluated at the new time level.
struct SourceTerms {
  SpaceTimeFunction f1, f2, f3, f4;
};

/// Unknowns per interior node, in interleaved order.
enum class Field : std::size_t { Xi = 0, Phi = 1, Psi = 2, Vartheta = 3 };
inline constexpr std::size_t kFieldsPerNode = 4;

/// Implicit Euler step matrix over (xi, Phi, psi, vartheta) with displacements
/// eliminated through u^n = u^{n-1} + dt xi^n and the like. Factorized once.
class BlockSystem {
 public:
  BlockSystem(const PhysicalParams& params, const UniformMesh& mesh, double dt);

  const PhysicalParams& params() const noexcept { return params_; }
  const UniformMesh& mesh() const noexcept { return mesh_; }
  double dt() const noexcept { return dt_; }
  const BandedMatrix& matrix() const noexcept { return matrix_; }
  const TriDiag& mass() const noexcept { return mass_; }
  const TriDiag& stiffness() const noexcept { return stiffness_; }
  const TriDiag& gradient() const noexcept { return gradient_; }

  static std::size_t index(std::size_t node, Field f) noexcept {
    return kFieldsPerNode * node + static_cast<std::size_t>(f);
  }

  /// Entry (i, j) of block (row_field, col_field).
  double block_entry(Field row, Field col, std::size_t i, std::size_t j) const {
    return matrix_.at(index(i, row), index(j, col));
  }

  /// Right-hand side for advancing from `s`, with optional load vectors (f_k, phi_i).
  std::vector<double> rhs(const State& s, const std::array<std::vector<double>, 4>* loads) const;

  /// Solves in place and checks the normwise residual. Throws SolverFailure.
  std::vector<double> solve(std::span<const double> rhs) const;

  static constexpr double kResidualTolerance = 1e-10;

 private:
  PhysicalParams params_;
  UniformMesh mesh_;
  double dt_;
  TriDiag mass_, stiffness_, gradient_;
  BandedMatrix matrix_;
  double matrix_norm_ = 0.0;
  std::optional<BandedLU> lu_;
};

BlockSystem assemble(const PhysicalParams& params, const UniformMesh& mesh, double dt);

/// Load vectors for f1..f4 at time t.
std::array<std::vector<double>, 4> evaluate_loads(const SourceTerms& sources, double t,
                                                  const UniformMesh& mesh);

/// One implicit Euler step from s to t + dt.
State advance(const BlockSystem& sys, const State& s,
              const std::optional<SourceTerms>& sources = std::nullopt);

/// Receives every time level, including n = 0.
class Observer {
 public:
  virtual ~Observer() = default;
  virtual void observe(const State& s) = 0;
};

struct RunResult {
  State final_state;
  long steps;
};

/// Advances the configured number of steps. SolverFailure is rethrown with the
/// step index in the message.
RunResult run(const ValidatedConfig& cfg, const InitialData& init,
              const std::optional<SourceTerms>& sources, std::span<Observer* const> observers);

}  // namespace shearbeam
