// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vqechem/qubit/qubit_hamiltonian.hpp"

namespace vqechem::sim {

/// Soft memory guard on the number of simulated qubits.
inline constexpr std::size_t kMaxQubits = 24;

using Amplitude = std::complex<double>;

/// 2^n amplitudes, little-endian: bit j of the index is qubit j.
class Statevector {
 public:
  /// |0...0> on n qubits.
  explicit Statevector(std::size_t n_qubits);
  static Statevector basis_state(std::size_t n_qubits, std::uint64_t index);
  /// Takes the amplitudes as given; the length must be a power of two.
  static Statevector from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  Amplitude operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  void normalize();

  void apply_x(std::size_t q);
  void apply_h(std::size_t q);
  void apply_sdg(std::size_t q);
  void apply_ry(std::size_t q, double theta);
  void apply_rz(std::size_t q, double theta);
  void apply_cnot(std::size_t control, std::size_t target);
  void apply_cz(std::size_t a, std::size_t b);
  /// exp(-i theta/2 P), exact.
  void apply_pauli_rotation(const qubit::PauliString& p, double theta);

  /// Debug dump: `index,re,im` with a header line.
  std::string to_csv() const;

 private:
  void check_qubit(std::size_t q) const;

  std::size_t n_qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

/// Computational basis state with ones exactly at `occupied` (X gates on |0>).
Statevector prepare_hf(std::size_t n_qubits, const std::vector<std::size_t>& occupied);

/// sum_k w_k <psi|P_k|psi>, matrix-free. Throws ShapeError on qubit mismatch.
double expectation(const Statevector& state, const qubit::QubitHamiltonian& h);

/// n_shots computational-basis outcomes drawn from |amplitude|^2 with a seeded
/// mt19937_64; histogram keyed by basis index.
std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_indices(const Statevector& state, std::uint64_t n_shots,
                                                                    std::uint64_t seed);

/// Same draw, keyed by bitstring with qubit 0 leftmost.
std::vector<std::pair<std::string, std::uint64_t>> sample(const Statevector& state, std::uint64_t n_shots,
                                                          std::uint64_t seed);

/// Bitstring of a basis index, qubit 0 leftmost.
std::string bitstring(std::uint64_t index, std::size_t n_qubits);

}  // namespace vqechem::sim
