// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/chem/tensor4.hpp"

#include <algorithm>
#include <cmath>

namespace vqechem::chem {

double Tensor4::symmetry_error() const {
  double err = 0.0;
  const auto& t = *this;
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t s = 0; s < n_; ++s) {
          const double v = t(p, q, r, s);
          err = std::max({err, std::abs(v - t(q, p, r, s)), std::abs(v - t(p, q, s, r)),
                          std::abs(v - t(r, s, p, q))});
        }
  return err;
}

}  // namespace vqechem::chem
