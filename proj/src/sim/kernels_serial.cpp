// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

// Reference kernels: straightforward loops over the full index range.

#include <bit>
#include <cmath>

#include "vqechem/sim/kernels.hpp"

namespace vqechem::sim::kernels::serial {

using qubit::basis_phase;

void apply_x(StateSpan psi, std::size_t q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (!(i & bit)) std::swap(psi[i], psi[i | bit]);
  }
}

void apply_h(StateSpan psi, std::size_t q) {
  const std::size_t bit = std::size_t{1} << q;
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a = psi[i], b = psi[i | bit];
    psi[i] = r * (a + b);
    psi[i | bit] = r * (a - b);
  }
}

void apply_sdg(StateSpan psi, std::size_t q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) psi[i] *= Amplitude(0.0, -1.0);
  }
}

void apply_ry(StateSpan psi, std::size_t q, double theta) {
  const std::size_t bit = std::size_t{1} << q;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a = psi[i], b = psi[i | bit];
    psi[i] = c * a - s * b;
    psi[i | bit] = s * a + c * b;
  }
}

void apply_rz(StateSpan psi, std::size_t q, double theta) {
  const std::size_t bit = std::size_t{1} << q;
  const Amplitude lo = std::polar(1.0, -theta / 2), hi = std::polar(1.0, theta / 2);
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= (i & bit) ? hi : lo;
}

void apply_cnot(StateSpan psi, std::size_t control, std::size_t target) {
  const std::size_t cb = std::size_t{1} << control, tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(psi[i], psi[i | tb]);
  }
}

void apply_cz(StateSpan psi, std::size_t a, std::size_t b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((i & mask) == mask) psi[i] = -psi[i];
  }
}

void apply_pauli_rotation(StateSpan psi, const qubit::PauliString& p, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const Amplitude mis(0.0, -s);
  if (p.x == 0) {
    for (std::size_t b = 0; b < psi.size(); ++b) psi[b] *= c + mis * basis_phase(p, b);
    return;
  }
  const std::size_t high = std::bit_floor(p.x);
  for (std::size_t b = 0; b < psi.size(); ++b) {
    if (b & high) continue;
    const std::size_t f = b ^ p.x;
    const Amplitude a0 = psi[b], a1 = psi[f];
    psi[b] = c * a0 + mis * basis_phase(p, f) * a1;
    psi[f] = c * a1 + mis * basis_phase(p, b) * a0;
  }
}

Amplitude pauli_expectation(ConstStateSpan psi, const qubit::PauliString& p) {
  Amplitude acc = 0.0;
  for (std::size_t b = 0; b < psi.size(); ++b) acc += std::conj(psi[b ^ p.x]) * basis_phase(p, b) * psi[b];
  return acc;
}

double expectation(ConstStateSpan psi, const qubit::QubitHamiltonian& h) {
  double e = 0.0;
  for (const auto& t : h.terms()) e += t.coefficient * pauli_expectation(psi, t.string).real();
  return e;
}

void apply_hamiltonian(const qubit::QubitHamiltonian& h, ConstStateSpan in, StateSpan out) {
  for (auto& a : out) a = 0.0;
  for (const auto& t : h.terms()) {
    for (std::size_t b = 0; b < in.size(); ++b) out[b ^ t.string.x] += t.coefficient * basis_phase(t.string, b) * in[b];
  }
}

double norm_squared(ConstStateSpan psi) {
  double acc = 0.0;
  for (const auto& a : psi) acc += std::norm(a);
  return acc;
}

}  // namespace vqechem::sim::kernels::serial
