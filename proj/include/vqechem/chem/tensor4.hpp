// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace vqechem::chem {

/// Dense n^4 array of two-electron integrals indexed (p, q, r, s).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}

  std::size_t dim() const noexcept { return n_; }

  double& operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  double operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }

  /// Writes v to all eight index permutations that are equal for real
  /// chemist-notation integrals.
  void set_symmetric(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v) {
    (*this)(p, q, r, s) = v;
    (*this)(q, p, r, s) = v;
    (*this)(p, q, s, r) = v;
    (*this)(q, p, s, r) = v;
    (*this)(r, s, p, q) = v;
    (*this)(s, r, p, q) = v;
    (*this)(r, s, q, p) = v;
    (*this)(s, r, q, p) = v;
  }

  /// Largest deviation from 8-fold permutation symmetry.
  double symmetry_error() const;

  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace vqechem::chem
