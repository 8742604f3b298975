// SPDX-License-Identifier: Apache-2.0
#include "shearbeam/banded.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <utility>

#include "shearbeam/errors.hpp"

namespace shearbeam {

BandedMatrix::BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper)
    : n_(n), kl_(lower), ku_(upper), width_(lower + upper + 1), data_(n * width_, 0.0) {}

double BandedMatrix::at(std::size_t i, std::size_t j) const noexcept {
  return in_band(i, j) ? data_[i * width_ + (j + kl_ - i)] : 0.0;
}

std::vector<double> BandedMatrix::apply(std::span<const double> x) const {
  assert(x.size() == n_);
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j0 = i > kl_ ? i - kl_ : 0;
    const std::size_t j1 = std::min(n_ - 1, i + ku_);
    const double* row = &data_[i * width_];
    double acc = 0.0;
    for (std::size_t j = j0; j <= j1; ++j) acc += row[j + kl_ - i] * x[j];
    y[i] = acc;
  }
  return y;
}

double BandedMatrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < width_; ++k) s += std::abs(data_[i * width_ + k]);
    best = std::max(best, s);
  }
  return best;
}

// Row i of the factor stores columns [i - kl, i + kl + ku]. A row swapped in
// from below the pivot never reaches further right than that window.
BandedLU::BandedLU(const BandedMatrix& a)
    : n_(a.size()),
      kl_(a.lower()),
      ku_(a.upper()),
      width_(2 * a.lower() + a.upper() + 1),
      data_(n_ * width_, 0.0),
      pivots_(n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j0 = i > kl_ ? i - kl_ : 0;
    const std::size_t j1 = std::min(n_ - 1, i + ku_);
    for (std::size_t j = j0; j <= j1; ++j) lu(i, j) = a.at(i, j);
  }

  const std::size_t reach = kl_ + ku_;
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t last_row = std::min(n_ - 1, k + kl_);
    const std::size_t last_col = std::min(n_ - 1, k + reach);

    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        p = i;
      }
    }
    pivots_[k] = p;
    if (best == 0.0) throw SingularSystem("zero pivot in banded LU at column " + std::to_string(k));
    if (p != k) {
      for (std::size_t j = k; j <= last_col; ++j) std::swap(lu(k, j), lu(p, j));
    }

    const double inv = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const double l = lu(i, k) * inv;
      lu(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j <= last_col; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
}

void BandedLU::solve_in_place(std::span<double> b) const {
  assert(b.size() == n_);
  for (std::size_t k = 0; k < n_; ++k) {
    if (pivots_[k] != k) std::swap(b[k], b[pivots_[k]]);
    const std::size_t last_row = std::min(n_ - 1, k + kl_);
    const double bk = b[k];
    for (std::size_t i = k + 1; i <= last_row; ++i) b[i] -= lu(i, k) * bk;
  }
  const std::size_t reach = kl_ + ku_;
  for (std::size_t i = n_; i-- > 0;) {
    const std::size_t last_col = std::min(n_ - 1, i + reach);
    double acc = b[i];
    for (std::size_t j = i + 1; j <= last_col; ++j) acc -= lu(i, j) * b[j];
    b[i] = acc / lu(i, i);
  }
}

std::vector<double> BandedLU::solve(std::span<const double> b) const {
  std::vector<double> x(b.begin(), b.end());
  solve_in_place(x);
  return x;
}

}  // namespace shearbeam
