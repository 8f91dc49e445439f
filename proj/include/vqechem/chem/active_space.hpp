// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "vqechem/chem/molecular_integrals.hpp"

namespace vqechem::chem {

struct ActiveSpaceSpec {
  std::vector<std::size_t> frozen_spatial;
  std::vector<std::size_t> active_spatial;

  /// Frozen = `frozen`, active = every other orbital.
  static ActiveSpaceSpec freeze(std::vector<std::size_t> frozen, std::size_t n_spatial);
};

/// Folds doubly occupied core orbitals into the constant and an effective
/// one-body operator:
///   E_core = sum_i 2 h_ii + sum_ij [2 (ii|jj) - (ij|ji)]
///   h'_pq  = h_pq + sum_i [2 (pq|ii) - (pi|iq)]
/// Throws SpecError for overlapping or out-of-range sets, or frozen orbitals
/// that are not doubly occupied in the reference.
MolecularIntegrals freeze_core(const MolecularIntegrals& integrals, const ActiveSpaceSpec& spec);

}  // namespace vqechem::chem
