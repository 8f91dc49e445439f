// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/ansatz/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vqechem/error.hpp"
#include "vqechem/qubit/jordan_wigner.hpp"

namespace vqechem::ansatz {

using qubit::an;
using qubit::cr;

sim::Circuit build_hardware_efficient(std::size_t n_qubits, std::size_t reps) {
  if (n_qubits < 2) throw ShapeError("hardware-efficient ansatz needs at least 2 qubits");
  sim::Circuit circuit(n_qubits, (reps + 1) * n_qubits);
  std::size_t slot = 0;
  for (std::size_t q = 0; q < n_qubits; ++q) circuit.add(sim::Gate::ry(q, slot++));
  for (std::size_t r = 0; r < reps; ++r) {
    for (std::size_t q = 0; q + 1 < n_qubits; ++q) circuit.add(sim::Gate::cnot(q, q + 1));
    for (std::size_t q = 0; q < n_qubits; ++q) circuit.add(sim::Gate::ry(q, slot++));
  }
  circuit.validate();
  return circuit;
}

ExcitationSet enumerate_excitations(std::size_t n_spin_orbitals, const std::vector<std::size_t>& occupied_in) {
  auto occupied = occupied_in;
  std::sort(occupied.begin(), occupied.end());
  occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
  if (occupied.empty()) throw ShapeError("enumerate_excitations: occupied set is empty");
  if (occupied.back() >= n_spin_orbitals) throw ShapeError("enumerate_excitations: occupied index out of range");
  std::vector<std::size_t> virt;
  for (std::size_t p = 0; p < n_spin_orbitals; ++p) {
    if (!std::binary_search(occupied.begin(), occupied.end(), p)) virt.push_back(p);
  }

  ExcitationSet set;
  for (std::size_t i : occupied)
    for (std::size_t a : virt) {
      if (i % 2 == a % 2) set.singles.push_back({i, a});
    }
  for (std::size_t x = 0; x < occupied.size(); ++x)
    for (std::size_t y = x + 1; y < occupied.size(); ++y)
      for (std::size_t u = 0; u < virt.size(); ++u)
        for (std::size_t v = u + 1; v < virt.size(); ++v) {
          const std::size_t i = occupied[x], j = occupied[y], a = virt[u], b = virt[v];
          if ((i % 2) + (j % 2) != (a % 2) + (b % 2)) continue;
          set.doubles.push_back({i, j, a, b});
        }
  return set;
}

namespace {

std::uint32_t m(std::size_t p) { return static_cast<std::uint32_t>(p); }

// Appends the exact exponential of one anti-Hermitian generator. The JW image
// of tau - tau^dagger is i * sum_k c_k P_k with mutually commuting P_k, so
// exp(theta * G) = prod_k exp(-i (-2 c_k theta) / 2 P_k).
void append_excitation(sim::Circuit& circuit, const qubit::FermionOperator& generator, std::size_t slot) {
  const auto sum = qubit::jordan_wigner_complex(generator, circuit.n_qubits());
  for (const auto& [w, p] : sum) {
    if (std::abs(w.real()) > 1e-12) throw NonHermitianError("excitation generator is not anti-Hermitian");
    if (std::abs(w.imag()) < qubit::kPruneThreshold) continue;
    circuit.add(sim::Gate::pauli_rotation(p, slot, -2.0 * w.imag()));
  }
}

}  // namespace

qubit::FermionOperator single_generator(const SingleExcitation& e) {
  qubit::FermionOperator g;
  g.add({cr(m(e.virtual_)), an(m(e.occupied))}, 1.0);
  g.add({cr(m(e.occupied)), an(m(e.virtual_))}, -1.0);
  return g;
}

qubit::FermionOperator double_generator(const DoubleExcitation& e) {
  qubit::FermionOperator g;
  g.add({cr(m(e.a)), cr(m(e.b)), an(m(e.j)), an(m(e.i))}, 1.0);
  g.add({cr(m(e.i)), cr(m(e.j)), an(m(e.b)), an(m(e.a))}, -1.0);
  return g;
}

sim::Circuit build_uccsd(std::size_t n_spin_orbitals, const std::vector<std::size_t>& occupied) {
  const auto excitations = enumerate_excitations(n_spin_orbitals, occupied);
  sim::Circuit circuit(n_spin_orbitals, excitations.size());
  std::size_t slot = 0;
  for (const auto& e : excitations.singles) append_excitation(circuit, single_generator(e), slot++);
  for (const auto& e : excitations.doubles) append_excitation(circuit, double_generator(e), slot++);
  circuit.validate();
  return circuit;
}

std::vector<std::size_t> hf_occupation(int n_electrons) {
  std::vector<std::size_t> occ;
  for (int i = 0; i < n_electrons; ++i) occ.push_back(static_cast<std::size_t>(i));
  return occ;
}

}  // namespace vqechem::ansatz
