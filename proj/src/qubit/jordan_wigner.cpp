// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/qubit/jordan_wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "vqechem/error.hpp"

namespace vqechem::qubit {

namespace {

using Complex = std::complex<double>;
using Accumulator = std::unordered_map<PauliString, Complex>;

constexpr std::size_t kChunk = 256;

void expand_term(const LadderString& ops, double coefficient, std::size_t n_qubits, Accumulator& acc) {
  std::vector<std::pair<Complex, PauliString>> current{{Complex(coefficient, 0.0), PauliString::identity(n_qubits)}};
  std::vector<std::pair<Complex, PauliString>> next;
  for (const auto& op : ops) {
    const std::uint64_t bit = std::uint64_t{1} << op.mode;
    const std::uint64_t z_string = bit - 1;
    const PauliString x_part(n_qubits, bit, z_string);
    const PauliString y_part(n_qubits, bit, z_string | bit);
    const Complex y_weight(0.0, op.dagger ? -0.5 : 0.5);
    next.clear();
    for (const auto& [w, p] : current) {
      auto [phx, px] = pauli_multiply(p, x_part);
      next.emplace_back(w * 0.5 * to_complex(phx), px);
      auto [phy, py] = pauli_multiply(p, y_part);
      next.emplace_back(w * y_weight * to_complex(phy), py);
    }
    std::swap(current, next);
  }
  for (const auto& [w, p] : current) acc[p] += w;
}

}  // namespace

ComplexPauliSum jordan_wigner_complex(const FermionOperator& op, std::size_t n_qubits) {
  const std::size_t needed = op.n_modes();
  if (n_qubits == 0) n_qubits = needed;
  if (n_qubits < needed) throw ShapeError("jordan_wigner: operator has " + std::to_string(needed) + " modes");
  if (n_qubits > kMaxPauliQubits) throw ShapeError("jordan_wigner: too many modes");

  std::vector<const std::pair<const LadderString, double>*> terms;
  terms.reserve(op.size());
  for (const auto& kv : op.terms()) terms.push_back(&kv);

  // Chunks are expanded independently and merged in chunk order, so the
  // floating-point summation order does not depend on the thread count.
  const std::size_t n_chunks = (terms.size() + kChunk - 1) / kChunk;
  std::vector<Accumulator> partial(n_chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t end = std::min(terms.size(), (c + 1) * kChunk);
    for (std::size_t t = c * kChunk; t < end; ++t) expand_term(terms[t]->first, terms[t]->second, n_qubits, partial[c]);
  }

  std::unordered_map<PauliString, Complex> merged;
  std::vector<PauliString> order;
  for (const auto& chunk : partial) {
    // Visit chunk entries in a fixed order.
    std::vector<std::pair<PauliString, Complex>> entries(chunk.begin(), chunk.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [p, w] : entries) {
      auto [it, inserted] = merged.emplace(p, w);
      if (inserted) {
        order.push_back(p);
      } else {
        it->second += w;
      }
    }
  }

  ComplexPauliSum out;
  for (const auto& p : order) {
    const Complex w = merged[p];
    if (std::abs(w) >= kPruneThreshold) out.emplace_back(w, p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second.str() < b.second.str(); });
  return out;
}

QubitHamiltonian jordan_wigner(const FermionOperator& op, std::size_t n_qubits) {
  const auto sum = jordan_wigner_complex(op, n_qubits);
  std::vector<PauliTerm> terms;
  terms.reserve(sum.size());
  for (const auto& [w, p] : sum) {
    if (std::abs(w.imag()) > 1e-10) {
      throw NonHermitianError("jordan_wigner: imaginary coefficient " + std::to_string(w.imag()) + " on " + p.str());
    }
    terms.push_back({w.real(), p});
  }
  return QubitHamiltonian::from_terms(n_qubits == 0 ? op.n_modes() : n_qubits, std::move(terms));
}

}  // namespace vqechem::qubit

namespace vqechem::qubit {

QubitHamiltonian molecular_qubit_hamiltonian(const chem::MolecularIntegrals& integrals) {
  return jordan_wigner(build_second_quantized(integrals), 2 * integrals.n_spatial_orbitals);
}

}  // namespace vqechem::qubit
