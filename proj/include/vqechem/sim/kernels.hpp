// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "vqechem/qubit/pauli.hpp"
#include "vqechem/qubit/qubit_hamiltonian.hpp"

// Statevector kernels in two flavours with identical signatures:
//   serial  plain loops, kept as the reference implementation for tests
//   omp     OpenMP data-parallel loops used by the library
// Amplitude index bit j is qubit j. Reductions in the OpenMP flavour sum fixed
// blocks in a fixed order, so results do not depend on the thread count.
namespace vqechem::sim::kernels {

using Amplitude = std::complex<double>;
using StateSpan = std::span<Amplitude>;
using ConstStateSpan = std::span<const Amplitude>;

/// States smaller than this run the OpenMP kernels single-threaded.
inline constexpr std::size_t kParallelMinDim = std::size_t{1} << 12;
/// Block length for deterministic reductions.
inline constexpr std::size_t kReductionBlock = std::size_t{1} << 10;

#define VQECHEM_KERNEL_DECLS                                                                        \
  void apply_x(StateSpan psi, std::size_t q);                                                       \
  void apply_h(StateSpan psi, std::size_t q);                                                       \
  void apply_sdg(StateSpan psi, std::size_t q);                                                     \
  void apply_ry(StateSpan psi, std::size_t q, double theta);                                        \
  void apply_rz(StateSpan psi, std::size_t q, double theta);                                        \
  void apply_cnot(StateSpan psi, std::size_t control, std::size_t target);                          \
  void apply_cz(StateSpan psi, std::size_t a, std::size_t b);                                       \
  /* exp(-i theta/2 P) */                                                                           \
  void apply_pauli_rotation(StateSpan psi, const qubit::PauliString& p, double theta);              \
  /* <psi|P|psi> */                                                                                 \
  Amplitude pauli_expectation(ConstStateSpan psi, const qubit::PauliString& p);                     \
  double expectation(ConstStateSpan psi, const qubit::QubitHamiltonian& h);                         \
  /* out = H in; out must not alias in */                                                           \
  void apply_hamiltonian(const qubit::QubitHamiltonian& h, ConstStateSpan in, StateSpan out);      \
  double norm_squared(ConstStateSpan psi);

namespace serial {
VQECHEM_KERNEL_DECLS
}  // namespace serial

namespace omp {
VQECHEM_KERNEL_DECLS
}  // namespace omp

#undef VQECHEM_KERNEL_DECLS

}  // namespace vqechem::sim::kernels
