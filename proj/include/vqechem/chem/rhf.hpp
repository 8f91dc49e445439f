// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "vqechem/chem/ao_integrals.hpp"

namespace vqechem::chem {

struct RhfOptions {
  double density_tolerance = 1e-8;  // max-abs change of the density matrix
  int max_iterations = 200;
};

struct RhfResult {
  double total_energy = 0.0;
  std::vector<double> orbital_energies;
  Eigen::MatrixXd mo_coefficients;  // n_ao x n_mo
  int n_iterations = 0;
  bool converged = false;
  std::vector<double> energy_trace;  // total energy after each Fock build
};

/// Closed-shell Roothaan-Hall SCF from a core-Hamiltonian guess. Requires an
/// even electron count no larger than 2 n_ao; throws ConvergenceError (with the
/// last energy) when the density has not settled after max_iterations.
RhfResult run_rhf(const AOIntegrals& ao, int n_electrons, const RhfOptions& options = {});

}  // namespace vqechem::chem
