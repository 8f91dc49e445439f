// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/qubit/pauli.hpp"

#include <string>

#include "vqechem/error.hpp"

namespace vqechem::qubit {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits != b.n_qubits) {
    throw ShapeError("Pauli strings act on " + std::to_string(a.n_qubits) + " and " + std::to_string(b.n_qubits) +
                     " qubits");
  }
}

}  // namespace

PauliString::PauliString(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask) : n_qubits(n), x(x_mask), z(z_mask) {
  if (n > kMaxPauliQubits) throw ShapeError("Pauli string limited to 64 qubits");
  if (((x | z) & ~low_mask(n)) != 0) throw ShapeError("Pauli mask exceeds n_qubits");
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString p(letters.size(), 0, 0);
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    switch (letters[j]) {
      case 'I': break;
      case 'X': p.x |= bit; break;
      case 'Y': p.x |= bit; p.z |= bit; break;
      case 'Z': p.z |= bit; break;
      default: throw FormatError(std::string("invalid Pauli letter '") + letters[j] + "'");
    }
  }
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, char letter) {
  if (qubit >= n) throw ShapeError("qubit index out of range");
  std::string letters(n, 'I');
  letters[qubit] = letter;
  return from_letters(letters);
}

char PauliString::letter(std::size_t qubit) const {
  const bool xb = (x >> qubit) & 1U;
  const bool zb = (z >> qubit) & 1U;
  if (xb) return zb ? 'Y' : 'X';
  return zb ? 'Z' : 'I';
}

std::string PauliString::str() const {
  std::string s(n_qubits, 'I');
  for (std::size_t j = 0; j < n_qubits; ++j) s[j] = letter(j);
  return s;
}

std::complex<double> to_complex(Phase phase) {
  switch (phase) {
    case Phase::kPlusOne: return {1.0, 0.0};
    case Phase::kPlusI: return {0.0, 1.0};
    case Phase::kMinusOne: return {-1.0, 0.0};
    case Phase::kMinusI: return {0.0, -1.0};
  }
  return {1.0, 0.0};
}

Phase phase_from_exponent(int exponent) { return static_cast<Phase>(((exponent % 4) + 4) % 4); }

std::pair<Phase, PauliString> pauli_multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  // With P = i^{popcount(x&z)} X^x Z^z, moving Z^{z_a} past X^{x_b} costs
  // (-1)^{popcount(z_a & x_b)}.
  PauliString product(a.n_qubits, a.x ^ b.x, a.z ^ b.z);
  const int exponent = a.y_count() + b.y_count() + 2 * std::popcount(a.z & b.x) - product.y_count();
  return {phase_from_exponent(exponent), product};
}

bool commutes_qubitwise(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const std::uint64_t both = a.support() & b.support();
  return ((a.x ^ b.x) & both) == 0 && ((a.z ^ b.z) & both) == 0;
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

}  // namespace vqechem::qubit
