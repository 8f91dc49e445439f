// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "vqechem/qubit/fermion_operator.hpp"
#include "vqechem/sim/circuit.hpp"

namespace vqechem::ansatz {

struct SingleExcitation {
  std::size_t occupied;
  std::size_t virtual_;
  friend bool operator==(const SingleExcitation&, const SingleExcitation&) = default;
};

struct DoubleExcitation {
  std::size_t i, j;  // occupied, i < j
  std::size_t a, b;  // virtual, a < b
  friend bool operator==(const DoubleExcitation&, const DoubleExcitation&) = default;
};

/// Spin-conserving excitations out of a reference determinant. Spin of spin
/// orbital p is p % 2 (interleaved ordering).
struct ExcitationSet {
  std::vector<SingleExcitation> singles;
  std::vector<DoubleExcitation> doubles;

  std::size_t size() const noexcept { return singles.size() + doubles.size(); }
};

/// RY layer, then `reps` blocks of [CNOT chain j -> j+1, RY layer];
/// (reps + 1) * n_qubits parameters.
sim::Circuit build_hardware_efficient(std::size_t n_qubits, std::size_t reps);

/// All spin-conserving singles and doubles from `occupied` into the remaining
/// spin orbitals, in lexicographic order.
ExcitationSet enumerate_excitations(std::size_t n_spin_orbitals, const std::vector<std::size_t>& occupied);

/// Anti-Hermitian generator tau - tau^dagger of one excitation.
qubit::FermionOperator single_generator(const SingleExcitation& e);
qubit::FermionOperator double_generator(const DoubleExcitation& e);

/// First-order, single-step Trotterized UCCSD: for each excitation k (singles
/// first, then doubles) the JW image of exp(theta_k (tau_k - tau_k^dagger)),
/// written as commuting Pauli rotations sharing slot k. Parameter count is
/// |singles| + |doubles|. The HF reference is not part of the circuit.
sim::Circuit build_uccsd(std::size_t n_spin_orbitals, const std::vector<std::size_t>& occupied);

/// Lowest n_electrons spin orbitals, {0, ..., n_electrons - 1}.
std::vector<std::size_t> hf_occupation(int n_electrons);

}  // namespace vqechem::ansatz
