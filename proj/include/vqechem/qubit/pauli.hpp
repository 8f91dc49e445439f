// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <complex>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace vqechem::qubit {

/// Maximum number of qubits a bitmask Pauli string can address.
inline constexpr std::size_t kMaxPauliQubits = 64;

/// Tensor product of single-qubit Paulis in symplectic form. Qubit j is bit j
/// of both masks: (x, z) = (0,0) I, (1,0) X, (1,1) Y, (0,1) Z.
struct PauliString {
  std::size_t n_qubits = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  PauliString() = default;
  PauliString(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliString identity(std::size_t n) { return PauliString(n, 0, 0); }
  /// Letters over {I, X, Y, Z}, qubit 0 leftmost.
  static PauliString from_letters(std::string_view letters);
  /// Single-letter string acting on `qubit`.
  static PauliString single(std::size_t n, std::size_t qubit, char letter);

  char letter(std::size_t qubit) const;
  std::string str() const;
  bool is_identity() const noexcept { return (x | z) == 0; }
  std::size_t weight() const noexcept { return static_cast<std::size_t>(std::popcount(x | z)); }
  std::uint64_t support() const noexcept { return x | z; }
  /// Number of Y letters; the matrix is i^{y_count} X^x Z^z.
  int y_count() const noexcept { return std::popcount(x & z); }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

/// Powers of i.
enum class Phase : std::uint8_t { kPlusOne = 0, kPlusI = 1, kMinusOne = 2, kMinusI = 3 };

std::complex<double> to_complex(Phase phase);
Phase phase_from_exponent(int exponent);

/// Product a*b = phase * product; throws ShapeError on size mismatch.
std::pair<Phase, PauliString> pauli_multiply(const PauliString& a, const PauliString& b);

/// True iff at every qubit the letters agree or one of them is I.
bool commutes_qubitwise(const PauliString& a, const PauliString& b);

/// Full commutation test (even number of anticommuting positions).
bool commutes(const PauliString& a, const PauliString& b);

/// Matrix element phase for P|b> = phase(b) |b xor x>:
/// phase(b) = i^{y_count} (-1)^{popcount(z & b)}.
inline std::complex<double> basis_phase(const PauliString& p, std::uint64_t basis_index) {
  static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int exponent = (p.y_count() + 2 * (std::popcount(p.z & basis_index) & 1)) & 3;
  return kIPow[exponent];
}

}  // namespace vqechem::qubit

template <>
struct std::hash<vqechem::qubit::PauliString> {
  std::size_t operator()(const vqechem::qubit::PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.x * 0x9E3779B97F4A7C15ULL ^ (p.z + 0x632BE59BD9B4E019ULL + (p.x << 6)));
  }
};
