// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vqechem/qubit/pauli.hpp"
#include "vqechem/sim/statevector.hpp"

namespace vqechem::sim {

enum class GateKind { kPauliX, kRotY, kRotZ, kCnot, kCz, kPauliRotation };

std::string to_string(GateKind kind);

/// One circuit operation. Rotation angle = scale * theta[slot] + offset when
/// parameterized, otherwise `offset` alone.
struct Gate {
  GateKind kind = GateKind::kPauliX;
  std::vector<std::size_t> qubits;
  std::optional<std::size_t> slot;
  double scale = 1.0;
  double offset = 0.0;
  qubit::PauliString pauli;  // PauliRotation only

  bool parameterized() const noexcept { return slot.has_value(); }
  double angle(std::span<const double> parameters) const;

  static Gate x(std::size_t q);
  static Gate ry(std::size_t q, std::size_t slot);
  static Gate rz(std::size_t q, std::size_t slot);
  static Gate ry_fixed(std::size_t q, double angle);
  static Gate rz_fixed(std::size_t q, double angle);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate cz(std::size_t a, std::size_t b);
  /// exp(-i (scale * theta[slot]) / 2 * P).
  static Gate pauli_rotation(const qubit::PauliString& p, std::size_t slot, double scale = 1.0);
  static Gate pauli_rotation_fixed(const qubit::PauliString& p, double angle);
};

/// Ordered gate list over n_qubits with n_parameters variational slots.
class Circuit {
 public:
  Circuit() = default;
  Circuit(std::size_t n_qubits, std::size_t n_parameters);

  /// Validates qubit indices and slot range.
  void add(Gate gate);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t n_parameters() const noexcept { return n_parameters_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t gate_count() const noexcept { return gates_.size(); }

  /// Throws ShapeError unless every slot in [0, n_parameters) is referenced.
  void validate() const;

  /// Layered depth; a PauliRotation occupies every qubit in its support.
  std::size_t depth() const;

  /// One gate per line: `<kind> <q0,q1,..> <p<slot>[*scale][+offset]|angle> [letters]`.
  std::string to_text() const;

 private:
  std::size_t n_qubits_ = 0;
  std::size_t n_parameters_ = 0;
  std::vector<Gate> gates_;
};

void apply_gate(Statevector& state, const Gate& gate, std::span<const double> parameters);

/// Applies the circuit in order; throws ShapeError when parameters.size() !=
/// n_parameters or the qubit counts differ.
Statevector apply_circuit(Statevector state, const Circuit& circuit, std::span<const double> parameters);

}  // namespace vqechem::sim
