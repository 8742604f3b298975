// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/femesh.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace shearbeam {

UniformMesh::UniformMesh(int elements, double length)
    : elements_(elements), length_(length), h_(length / elements) {
  if (elements < 2) throw InvalidMesh("M", "need at least 2 elements");
  if (!(length > 0.0)) throw NonPositiveParameter("L");
}

FeFunction::FeFunction(const UniformMesh& mesh) : mesh_(mesh), c_(mesh.interior(), 0.0) {}

FeFunction::FeFunction(const UniformMesh& mesh, std::vector<double> coefficients)
    : mesh_(mesh), c_(std::move(coefficients)) {
  if (c_.size() != mesh_.interior()) {
    throw InvalidMesh("coefficients", "expected " + std::to_string(mesh_.interior()) +
                                          " values, got " + std::to_string(c_.size()));
  }
}

double FeFunction::nodal(int i) const noexcept {
  if (i <= 0 || i >= mesh_.elements()) return 0.0;
  return c_[static_cast<std::size_t>(i - 1)];
}

double FeFunction::operator()(double x) const {
  const double h = mesh_.h();
  int e = static_cast<int>(std::floor(x / h));
  if (e < 0) e = 0;
  if (e >= mesh_.elements()) e = mesh_.elements() - 1;
  const double s = (x - mesh_.node(e)) / h;
  return (1.0 - s) * nodal(e) + s * nodal(e + 1);
}

double FeFunction::slope(int e) const noexcept { return (nodal(e + 1) - nodal(e)) / mesh_.h(); }

FeFunction& FeFunction::operator+=(const FeFunction& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FeFunction& FeFunction::operator-=(const FeFunction& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FeFunction& FeFunction::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

double TriDiag::at(std::size_t i, std::size_t j) const {
  if (i == j) return diag[i];
  if (j == i + 1) return sup[i];
  if (i == j + 1) return sub[j];
  return 0.0;
}

std::vector<double> TriDiag::apply(std::span<const double> v) const {
  const std::size_t n = size();
  assert(v.size() == n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * v[i];
    if (i > 0) acc += sub[i - 1] * v[i - 1];
    if (i + 1 < n) acc += sup[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

TriDiag TriDiag::transposed() const { return TriDiag{sup, diag, sub, symmetric}; }

double TriDiag::bilinear(std::span<const double> v, std::span<const double> w) const {
  const auto aw = apply(w);
  double acc = 0.0;
  for (std::size_t i = 0; i < aw.size(); ++i) acc += v[i] * aw[i];
  return acc;
}

std::vector<double> TriDiag::solve(std::span<const double> rhs) const {
  const std::size_t n = size();
  std::vector<double> c(n), d(n);
  double pivot = diag[0];
  if (pivot == 0.0) throw SingularSystem("zero pivot in tridiagonal solve at row 0");
  c[0] = n > 1 ? sup[0] / pivot : 0.0;
  d[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - sub[i - 1] * c[i - 1];
    if (pivot == 0.0) {
      throw SingularSystem("zero pivot in tridiagonal solve at row " + std::to_string(i));
    }
    c[i] = i + 1 < n ? sup[i] / pivot : 0.0;
    d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
  return d;
}

namespace {

TriDiag constant_tridiag(std::size_t n, double sub, double diag, double sup, bool symmetric) {
  return TriDiag{std::vector<double>(n - 1, sub), std::vector<double>(n, diag),
                 std::vector<double>(n - 1, sup), symmetric};
}

}  // namespace

TriDiag build_mass(const UniformMesh& mesh) {
  const double h = mesh.h();
  return constant_tridiag(mesh.interior(), h / 6.0, 2.0 * h / 3.0, h / 6.0, true);
}

TriDiag build_stiffness(const UniformMesh& mesh) {
  const double h = mesh.h();
  return constant_tridiag(mesh.interior(), -1.0 / h, 2.0 / h, -1.0 / h, true);
}

TriDiag build_gradient(const UniformMesh& mesh) {
  return constant_tridiag(mesh.interior(), -0.5, 0.0, 0.5, false);
}

FeFunction interpolate(const SpatialFunction& f, const UniformMesh& mesh) {
  FeFunction out(mesh);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(mesh.node(static_cast<int>(i) + 1));
  return out;
}

double l2_norm(const FeFunction& v) {
  const auto c = v.coefficients();
  return std::sqrt(std::max(0.0, build_mass(v.mesh()).bilinear(c, c)));
}

double h1_seminorm(const FeFunction& v) {
  const auto c = v.coefficients();
  return std::sqrt(std::max(0.0, build_stiffness(v.mesh()).bilinear(c, c)));
}

const GaussRule& gauss3() {
  static const GaussRule rule = [] {
    const double a = std::sqrt(3.0 / 5.0);
    return GaussRule{{0.5 * (1.0 - a), 0.5, 0.5 * (1.0 + a)}, {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0}};
  }();
  return rule;
}

std::vector<double> load_vector(const SpaceTimeFunction& f, double t, const UniformMesh& mesh) {
  const auto& g = gauss3();
  const double h = mesh.h();
  const std::size_t n = mesh.interior();
  std::vector<double> out(n, 0.0);
  for (int e = 0; e < mesh.elements(); ++e) {
    const double x0 = mesh.node(e);
    double left = 0.0;   // against the hat of node e
    double right = 0.0;  // against the hat of node e + 1
    for (int q = 0; q < 3; ++q) {
      const double s = g.points[q];
      const double fx = f(x0 + s * h, t) * g.weights[q] * h;
      left += fx * (1.0 - s);
      right += fx * s;
    }
    if (e >= 1) out[static_cast<std::size_t>(e - 1)] += left;
    if (e + 1 <= static_cast<int>(n)) out[static_cast<std::size_t>(e)] += right;
  }
  return out;
}

std::vector<double> load_vector(const SpatialFunction& f, const UniformMesh& mesh) {
  return load_vector([&f](double x, double) { return f(x); }, 0.0, mesh);
}

double l2_error(const FeFunction& v, const SpatialFunction& f) {
  const auto& g = gauss3();
  const auto& mesh = v.mesh();
  const double h = mesh.h();
  double acc = 0.0;
  for (int e = 0; e < mesh.elements(); ++e) {
    const double a = v.nodal(e);
    const double b = v.nodal(e + 1);
    for (int q = 0; q < 3; ++q) {
      const double s = g.points[q];
      const double d = (1.0 - s) * a + s * b - f(mesh.node(e) + s * h);
      acc += g.weights[q] * h * d * d;
    }
  }
  return std::sqrt(acc);
}

double h1_semi_error(const FeFunction& v, const SpatialFunction& fx) {
  const auto& g = gauss3();
  const auto& mesh = v.mesh();
  const double h = mesh.h();
  double acc = 0.0;
  for (int e = 0; e < mesh.elements(); ++e) {
    const double slope = v.slope(e);
    for (int q = 0; q < 3; ++q) {
      const double d = slope - fx(mesh.node(e) + g.points[q] * h);
      acc += g.weights[q] * h * d * d;
    }
  }
  return std::sqrt(acc);
}

}  // namespace shearbeam
