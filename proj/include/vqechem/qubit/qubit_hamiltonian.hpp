// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vqechem/qubit/pauli.hpp"

namespace vqechem::qubit {

/// Terms with |w| below this are dropped when a Hamiltonian is assembled.
inline constexpr double kPruneThreshold = 1e-12;

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// H = sum_k w_k P_k with real weights, distinct strings, sorted by letter string.
class QubitHamiltonian {
 public:
  QubitHamiltonian() = default;
  explicit QubitHamiltonian(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  /// Combines duplicate strings, drops |w| < kPruneThreshold, sorts.
  static QubitHamiltonian from_terms(std::size_t n_qubits, std::vector<PauliTerm> terms);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of the identity string (0 when absent).
  double identity_coefficient() const;

  /// One term per line: `<coefficient> <letters>`, qubit 0 leftmost.
  std::string to_text() const;
  static QubitHamiltonian parse_text(std::string_view text);

 private:
  std::size_t n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

}  // namespace vqechem::qubit
