// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "vqechem/chem/molecule.hpp"
#include "vqechem/chem/tensor4.hpp"

namespace vqechem::chem {

/// One contracted s-type Gaussian: sum_k c_k N(a_k) exp(-a_k |r - center|^2),
/// with the contraction coefficients already scaled so the function has unit norm.
struct ContractedGaussian {
  Vec3 center{};
  std::vector<double> exponents;
  std::vector<double> coefficients;
};

struct AOIntegrals {
  std::size_t n_ao = 0;
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;
  Tensor4 eri;  // chemist notation (pq|rs)
  double e_nuc = 0.0;

  Eigen::MatrixXd core_hamiltonian() const { return kinetic + nuclear; }
};

/// STO-3G hydrogen 1s basis loaded from the embedded data fixture.
struct BasisSetData {
  std::string name;
  int version = 0;
  std::vector<double> exponents;
  std::vector<double> coefficients;
};
const BasisSetData& sto3g_hydrogen();

/// Boys function of order zero, F0(t) = int_0^1 exp(-t u^2) du.
double boys_f0(double t);

/// Normalized STO-3G 1s functions centred on each atom of a hydrogen-only molecule.
std::vector<ContractedGaussian> build_sto3g_basis(const Molecule& molecule);

/// Overlap, kinetic, nuclear-attraction and electron-repulsion integrals over
/// the STO-3G s basis. Throws UnsupportedElementError for non-hydrogen atoms and
/// SingularGeometryError for coincident nuclei.
AOIntegrals compute_ao_integrals(const Molecule& molecule);

}  // namespace vqechem::chem
