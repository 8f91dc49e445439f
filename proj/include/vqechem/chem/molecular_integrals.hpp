// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "vqechem/chem/ao_integrals.hpp"
#include "vqechem/chem/rhf.hpp"
#include "vqechem/chem/tensor4.hpp"

namespace vqechem::chem {

/// Spatial-orbital integrals in an orthonormal orbital basis: the input to the
/// fermionic Hamiltonian. `g` is in chemist notation.
struct MolecularIntegrals {
  std::size_t n_spatial_orbitals = 0;
  int n_electrons = 0;
  double constant_energy = 0.0;
  Eigen::MatrixXd h;
  Tensor4 g;

  /// Throws ShapeError / FormatError when h is not symmetric, g lacks 8-fold
  /// symmetry (both within `tolerance`) or an entry is not finite.
  void validate(double tolerance = 1e-10) const;
};

/// AO -> MO transformation with the RHF coefficients. The two-electron part is
/// a four-quarter transformation, O(n^5).
MolecularIntegrals transform_to_mo(const AOIntegrals& ao, const RhfResult& rhf, int n_electrons);

/// Closed-shell energy of the determinant occupying the lowest n_electrons/2
/// orbitals, evaluated from MO integrals.
double closed_shell_energy(const MolecularIntegrals& integrals);

}  // namespace vqechem::chem
