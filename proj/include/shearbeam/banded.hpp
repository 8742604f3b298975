// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace shearbeam {

/// Square matrix with `lower` sub- and `upper` super-diagonals, row-major band storage.
class BandedMatrix {
 public:
  BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper);

  std::size_t size() const noexcept { return n_; }
  std::size_t lower() const noexcept { return kl_; }
  std::size_t upper() const noexcept { return ku_; }

  bool in_band(std::size_t i, std::size_t j) const noexcept {
    return j + kl_ >= i && j <= i + ku_ && i < n_ && j < n_;
  }
  /// Zero outside the band.
  double at(std::size_t i, std::size_t j) const noexcept;
  /// Precondition: in_band(i, j).
  double& ref(std::size_t i, std::size_t j) noexcept { return data_[i * width_ + (j + kl_ - i)]; }
  void add(std::size_t i, std::size_t j, double v) noexcept { ref(i, j) += v; }

  std::vector<double> apply(std::span<const double> x) const;
  double norm_inf() const noexcept;

 private:
  std::size_t n_, kl_, ku_, width_;
  std::vector<double> data_;
};

/// LU factorization with partial pivoting. Fill-in widens the upper band of U
/// to lower + upper, as in LAPACK's gbtrf.
class BandedLU {
 public:
  /// Throws SingularSystem on a zero pivot.
  explicit BandedLU(const BandedMatrix& a);

  std::size_t size() const noexcept { return n_; }
  /// Overwrites b with the solution.
  void solve_in_place(std::span<double> b) const;
  std::vector<double> solve(std::span<const double> b) const;

 private:
  double& lu(std::size_t i, std::size_t j) noexcept { return data_[i * width_ + (j + kl_ - i)]; }
  double lu(std::size_t i, std::size_t j) const noexcept { return data_[i * width_ + (j + kl_ - i)]; }

  std::size_t n_, kl_, ku_, width_;
  std::vector<double> data_;
  std::vector<std::size_t> pivots_;
};

}  // namespace shearbeam
