// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/sim/circuit.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

#include "vqechem/error.hpp"

namespace vqechem::sim {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kPauliX: return "X";
    case GateKind::kRotY: return "RY";
    case GateKind::kRotZ: return "RZ";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kCz: return "CZ";
    case GateKind::kPauliRotation: return "PAULIROT";
  }
  return "?";
}

double Gate::angle(std::span<const double> parameters) const {
  if (!slot) return offset;
  return scale * parameters[*slot] + offset;
}

Gate Gate::x(std::size_t q) { return {GateKind::kPauliX, {q}, std::nullopt, 1.0, 0.0, {}}; }
Gate Gate::ry(std::size_t q, std::size_t slot) { return {GateKind::kRotY, {q}, slot, 1.0, 0.0, {}}; }
Gate Gate::rz(std::size_t q, std::size_t slot) { return {GateKind::kRotZ, {q}, slot, 1.0, 0.0, {}}; }
Gate Gate::ry_fixed(std::size_t q, double angle) { return {GateKind::kRotY, {q}, std::nullopt, 1.0, angle, {}}; }
Gate Gate::rz_fixed(std::size_t q, double angle) { return {GateKind::kRotZ, {q}, std::nullopt, 1.0, angle, {}}; }
Gate Gate::cnot(std::size_t control, std::size_t target) {
  return {GateKind::kCnot, {control, target}, std::nullopt, 1.0, 0.0, {}};
}
Gate Gate::cz(std::size_t a, std::size_t b) { return {GateKind::kCz, {a, b}, std::nullopt, 1.0, 0.0, {}}; }

namespace {

std::vector<std::size_t> support_qubits(const qubit::PauliString& p) {
  std::vector<std::size_t> qs;
  for (std::uint64_t m = p.support(); m; m &= m - 1) qs.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return qs;
}

}  // namespace

Gate Gate::pauli_rotation(const qubit::PauliString& p, std::size_t slot, double scale) {
  return {GateKind::kPauliRotation, support_qubits(p), slot, scale, 0.0, p};
}

Gate Gate::pauli_rotation_fixed(const qubit::PauliString& p, double angle) {
  return {GateKind::kPauliRotation, support_qubits(p), std::nullopt, 1.0, angle, p};
}

Circuit::Circuit(std::size_t n_qubits, std::size_t n_parameters) : n_qubits_(n_qubits), n_parameters_(n_parameters) {
  if (n_qubits > kMaxQubits) throw ShapeError("circuit: too many qubits");
}

void Circuit::add(Gate gate) {
  for (std::size_t q : gate.qubits) {
    if (q >= n_qubits_) throw ShapeError(fmt::format("gate {} on qubit {} of a {}-qubit circuit", to_string(gate.kind), q, n_qubits_));
  }
  auto sorted = gate.qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ShapeError("gate qubits must be distinct");
  const std::size_t arity = (gate.kind == GateKind::kCnot || gate.kind == GateKind::kCz) ? 2 : 1;
  if (gate.kind != GateKind::kPauliRotation && gate.qubits.size() != arity) throw ShapeError("gate arity mismatch");
  if (gate.kind == GateKind::kPauliRotation && gate.pauli.n_qubits != n_qubits_) {
    throw ShapeError("Pauli rotation string has the wrong qubit count");
  }
  if (gate.slot && *gate.slot >= n_parameters_) throw ShapeError("gate references a parameter slot out of range");
  if (gate.slot && (gate.kind == GateKind::kPauliX || gate.kind == GateKind::kCnot || gate.kind == GateKind::kCz)) {
    throw ShapeError("non-rotation gate cannot be parameterized");
  }
  gates_.push_back(std::move(gate));
}

void Circuit::validate() const {
  std::vector<bool> used(n_parameters_, false);
  for (const auto& g : gates_) {
    if (g.slot) used[*g.slot] = true;
  }
  for (std::size_t s = 0; s < n_parameters_; ++s) {
    if (!used[s]) throw ShapeError(fmt::format("parameter slot {} is never used", s));
  }
}

std::size_t Circuit::depth() const {
  std::vector<std::size_t> level(n_qubits_, 0);
  std::size_t depth = 0;
  for (const auto& g : gates_) {
    std::size_t d = 0;
    for (std::size_t q : g.qubits) d = std::max(d, level[q]);
    ++d;
    for (std::size_t q : g.qubits) level[q] = d;
    depth = std::max(depth, d);
  }
  return depth;
}

std::string Circuit::to_text() const {
  std::string out;
  for (const auto& g : gates_) {
    std::string qs;
    for (std::size_t i = 0; i < g.qubits.size(); ++i) qs += (i ? "," : "") + std::to_string(g.qubits[i]);
    if (qs.empty()) qs = "-";
    std::string angle = "-";
    if (g.slot) {
      angle = fmt::format("p{}", *g.slot);
      if (g.scale != 1.0) angle += fmt::format("*{:.17g}", g.scale);
      if (g.offset != 0.0) angle += fmt::format("{:+.17g}", g.offset);
    } else if (g.kind == GateKind::kRotY || g.kind == GateKind::kRotZ || g.kind == GateKind::kPauliRotation) {
      angle = fmt::format("{:.17g}", g.offset);
    }
    out += fmt::format("{} {} {}", to_string(g.kind), qs, angle);
    if (g.kind == GateKind::kPauliRotation) out += " " + g.pauli.str();
    out += "\n";
  }
  return out;
}

void apply_gate(Statevector& state, const Gate& gate, std::span<const double> parameters) {
  switch (gate.kind) {
    case GateKind::kPauliX: state.apply_x(gate.qubits[0]); break;
    case GateKind::kRotY: state.apply_ry(gate.qubits[0], gate.angle(parameters)); break;
    case GateKind::kRotZ: state.apply_rz(gate.qubits[0], gate.angle(parameters)); break;
    case GateKind::kCnot: state.apply_cnot(gate.qubits[0], gate.qubits[1]); break;
    case GateKind::kCz: state.apply_cz(gate.qubits[0], gate.qubits[1]); break;
    case GateKind::kPauliRotation: state.apply_pauli_rotation(gate.pauli, gate.angle(parameters)); break;
  }
}

Statevector apply_circuit(Statevector state, const Circuit& circuit, std::span<const double> parameters) {
  if (parameters.size() != circuit.n_parameters()) {
    throw ShapeError(fmt::format("circuit expects {} parameters, got {}", circuit.n_parameters(), parameters.size()));
  }
  if (state.n_qubits() != circuit.n_qubits()) throw ShapeError("circuit and state qubit counts differ");
  for (const auto& g : circuit.gates()) apply_gate(state, g, parameters);
  return state;
}

}  // namespace vqechem::sim
