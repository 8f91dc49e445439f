// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/chem/active_space.hpp"

#include <algorithm>
#include <string>

#include "vqechem/error.hpp"

namespace vqechem::chem {

ActiveSpaceSpec ActiveSpaceSpec::freeze(std::vector<std::size_t> frozen, std::size_t n_spatial) {
  std::sort(frozen.begin(), frozen.end());
  ActiveSpaceSpec spec;
  for (std::size_t p = 0; p < n_spatial; ++p) {
    if (!std::binary_search(frozen.begin(), frozen.end(), p)) spec.active_spatial.push_back(p);
  }
  spec.frozen_spatial = std::move(frozen);
  return spec;
}

MolecularIntegrals freeze_core(const MolecularIntegrals& integrals, const ActiveSpaceSpec& spec) {
  auto frozen = spec.frozen_spatial;
  auto active = spec.active_spatial;
  std::sort(frozen.begin(), frozen.end());
  std::sort(active.begin(), active.end());
  const std::size_t n = integrals.n_spatial_orbitals;
  if (std::adjacent_find(frozen.begin(), frozen.end()) != frozen.end() ||
      std::adjacent_find(active.begin(), active.end()) != active.end()) {
    throw SpecError("freeze_core: duplicate orbital index");
  }
  for (std::size_t p : frozen) {
    if (std::binary_search(active.begin(), active.end(), p)) {
      throw SpecError("freeze_core: orbital " + std::to_string(p) + " is both frozen and active");
    }
  }
  if ((!frozen.empty() && frozen.back() >= n) || (!active.empty() && active.back() >= n)) {
    throw SpecError("freeze_core: orbital index outside 0.." + std::to_string(n - 1));
  }
  const std::size_t n_doubly = static_cast<std::size_t>(integrals.n_electrons / 2);
  for (std::size_t p : frozen) {
    if (p >= n_doubly) throw SpecError("freeze_core: orbital " + std::to_string(p) + " is not doubly occupied");
  }

  if (integrals.n_electrons - 2 * static_cast<int>(frozen.size()) > 2 * static_cast<int>(active.size())) {
    throw SpecError("freeze_core: active space too small for the remaining electrons");
  }

  const auto& h = integrals.h;
  const auto& g = integrals.g;
  MolecularIntegrals out;
  out.n_spatial_orbitals = active.size();
  out.n_electrons = integrals.n_electrons - 2 * static_cast<int>(frozen.size());
  out.constant_energy = integrals.constant_energy;
  for (std::size_t i : frozen) {
    out.constant_energy += 2.0 * h(i, i);
    for (std::size_t j : frozen) out.constant_energy += 2.0 * g(i, i, j, j) - g(i, j, j, i);
  }

  const std::size_t m = active.size();
  out.h = Eigen::MatrixXd::Zero(m, m);
  out.g = Tensor4(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t p = active[a], q = active[b];
      double v = h(p, q);
      for (std::size_t i : frozen) v += 2.0 * g(p, q, i, i) - g(p, i, i, q);
      out.h(a, b) = v;
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < m; ++d) out.g(a, b, c, d) = g(p, q, active[c], active[d]);
    }
  return out;
}

}  // namespace vqechem::chem
