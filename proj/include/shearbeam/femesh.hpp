// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "shearbeam/model.hpp"

namespace shearbeam {

/// Function of position and time, e.g. a source term or an exact field.
using SpaceTimeFunction = std::function<double(double, double)>;

/// Uniform partition of [0, L] into M elements; nodes x_i = i h.
class UniformMesh {
 public:
  UniformMesh(int elements, double length);

  int elements() const noexcept { return elements_; }
  /// Number of interior nodes, M - 1. Also the FE space dimension.
  std::size_t interior() const noexcept { return static_cast<std::size_t>(elements_ - 1); }
  double length() const noexcept { return length_; }
  double h() const noexcept { return h_; }
  /// Coordinate of node i in 0..M. x(M) is exactly L.
  double node(int i) const noexcept { return i == elements_ ? length_ : i * h_; }

  bool operator==(const UniformMesh&) const = default;

 private:
  int elements_;
  double length_;
  double h_;
};

/// Continuous piecewise-affine function vanishing at both endpoints, stored
/// by its values at the interior nodes.
class FeFunction {
 public:
  explicit FeFunction(const UniformMesh& mesh);
  FeFunction(const UniformMesh& mesh, std::vector<double> coefficients);

  const UniformMesh& mesh() const noexcept { return mesh_; }
  std::size_t size() const noexcept { return c_.size(); }
  std::span<const double> coefficients() const noexcept { return c_; }
  std::span<double> coefficients() noexcept { return c_; }
  double operator[](std::size_t i) const noexcept { return c_[i]; }
  double& operator[](std::size_t i) noexcept { return c_[i]; }

  /// Value at node i in 0..M, including the zero boundary values.
  double nodal(int i) const noexcept;
  /// Point evaluation anywhere in [0, L].
  double operator()(double x) const;
  /// Constant slope on element e in 0..M-1.
  double slope(int e) const noexcept;

  FeFunction& operator+=(const FeFunction& o);
  FeFunction& operator-=(const FeFunction& o);
  FeFunction& operator*=(double s);
  friend FeFunction operator+(FeFunction a, const FeFunction& b) { return a += b; }
  friend FeFunction operator-(FeFunction a, const FeFunction& b) { return a -= b; }
  friend FeFunction operator*(double s, FeFunction a) { return a *= s; }

 private:
  UniformMesh mesh_;
  std::vector<double> c_;
};

/// Tridiagonal matrix over interior nodes. sub[i] is A(i+1, i), sup[i] is A(i, i+1).
struct TriDiag {
  std::vector<double> sub, diag, sup;
  bool symmetric = false;

  std::size_t size() const noexcept { return diag.size(); }
  double at(std::size_t i, std::size_t j) const;
  std::vector<double> apply(std::span<const double> v) const;
  TriDiag transposed() const;
  /// v^T A w
  double bilinear(std::span<const double> v, std::span<const double> w) const;
  /// Thomas algorithm without pivoting; throws SingularSystem on a zero pivot.
  std::vector<double> solve(std::span<const double> rhs) const;
};

/// (phi_j, phi_i): diagonal 2h/3, off-diagonals h/6.
TriDiag build_mass(const UniformMesh& mesh);
/// (phi_j', phi_i'): diagonal 2/h, off-diagonals -1/h.
TriDiag build_stiffness(const UniformMesh& mesh);
/// (phi_j', phi_i): zero diagonal, super 1/2, sub -1/2. Antisymmetric.
TriDiag build_gradient(const UniformMesh& mesh);

/// Nodal interpolant; c_i = f(x_i).
FeFunction interpolate(const SpatialFunction& f, const UniformMesh& mesh);

double l2_norm(const FeFunction& v);
double h1_seminorm(const FeFunction& v);

/// 3-point Gauss-Legendre rule on the reference interval [0, 1].
struct GaussRule {
  std::array<double, 3> points;
  std::array<double, 3> weights;
};
const GaussRule& gauss3();

/// Entries (f(., t), phi_i) over interior nodes, 3-point Gauss per element.
std::vector<double> load_vector(const SpaceTimeFunction& f, double t, const UniformMesh& mesh);
std::vector<double> load_vector(const SpatialFunction& f, const UniformMesh& mesh);

/// ||v - f|| with 3-point Gauss per element.
double l2_error(const FeFunction& v, const SpatialFunction& f);
/// ||v_x - fx|| with 3-point Gauss per element.
double h1_semi_error(const FeFunction& v, const SpatialFunction& fx);

}  // namespace shearbeam
