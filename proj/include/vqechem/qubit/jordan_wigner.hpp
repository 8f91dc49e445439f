// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "vqechem/qubit/fermion_operator.hpp"
#include "vqechem/qubit/qubit_hamiltonian.hpp"

namespace vqechem::qubit {

/// Pauli expansion with complex weights, before the reality check.
using ComplexPauliSum = std::vector<std::pair<std::complex<double>, PauliString>>;

/// Jordan-Wigner image of a fermion operator:
///   a+_j -> 1/2 (X_j - i Y_j) Z_0 ... Z_{j-1}
///   a_j  -> 1/2 (X_j + i Y_j) Z_0 ... Z_{j-1}
/// Like strings are combined and entries with |w| < kPruneThreshold dropped.
/// n_qubits = 0 uses op.n_modes().
ComplexPauliSum jordan_wigner_complex(const FermionOperator& op, std::size_t n_qubits = 0);

/// Real qubit Hamiltonian; imaginary residues below 1e-10 are discarded and a
/// larger residue raises NonHermitianError.
QubitHamiltonian jordan_wigner(const FermionOperator& op, std::size_t n_qubits = 0);

}  // namespace vqechem::qubit

namespace vqechem::qubit {

/// build_second_quantized followed by jordan_wigner on 2 * n_spatial qubits.
QubitHamiltonian molecular_qubit_hamiltonian(const chem::MolecularIntegrals& integrals);

}  // namespace vqechem::qubit
