// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vqechem/qubit/qubit_hamiltonian.hpp"
#include "vqechem/sim/statevector.hpp"

namespace vqechem::exactdiag {

using Vector = std::vector<std::complex<double>>;

/// H v without forming a matrix. Throws ShapeError unless v.size() == 2^n.
Vector apply_hamiltonian(const qubit::QubitHamiltonian& h, const Vector& v);

enum class Method { kAuto, kDense, kLanczos };

struct GroundStateOptions {
  Method method = Method::kAuto;
  /// kAuto uses the dense solver up to this many qubits.
  std::size_t dense_max_qubits = 10;
  double residual_tolerance = 1e-9;
  std::size_t krylov_dim = 120;
  std::size_t max_restarts = 50;
  std::uint64_t seed = 20240917;
  bool keep_eigenvector = true;
};

struct GroundStateResult {
  double energy = 0.0;
  std::optional<sim::Statevector> eigenvector;
  double residual_norm = 0.0;
  std::size_t iterations = 0;
  Method method = Method::kDense;
};

/// Lowest eigenvalue over the full 2^n space (all particle-number sectors).
GroundStateResult ground_state_energy(const qubit::QubitHamiltonian& h, const GroundStateOptions& options = {});

}  // namespace vqechem::exactdiag
