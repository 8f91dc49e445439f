// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/sim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include <fmt/format.h>

#include "vqechem/error.hpp"
#include "vqechem/sim/kernels.hpp"

namespace vqechem::sim {

namespace k = kernels::omp;

namespace {

void check_size(std::size_t n_qubits) {
  if (n_qubits > kMaxQubits) {
    throw ShapeError(fmt::format("statevector: {} qubits exceeds the {}-qubit limit", n_qubits, kMaxQubits));
  }
}

}  // namespace

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_size(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude(0.0));
  amplitudes_[0] = 1.0;
}

Statevector Statevector::basis_state(std::size_t n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dim()) throw ShapeError("basis_state: index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw ShapeError("from_amplitudes: length must be a power of two");
  }
  Statevector s(0);
  s.n_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
  check_size(s.n_qubits_);
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

double Statevector::norm() const { return std::sqrt(k::norm_squared(amplitudes_)); }

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0) throw Error("normalize: zero vector");
  for (auto& a : amplitudes_) a /= n;
}

void Statevector::check_qubit(std::size_t q) const {
  if (q >= n_qubits_) throw ShapeError(fmt::format("qubit {} out of range for {} qubits", q, n_qubits_));
}

void Statevector::apply_x(std::size_t q) { check_qubit(q); k::apply_x(amplitudes_, q); }
void Statevector::apply_h(std::size_t q) { check_qubit(q); k::apply_h(amplitudes_, q); }
void Statevector::apply_sdg(std::size_t q) { check_qubit(q); k::apply_sdg(amplitudes_, q); }
void Statevector::apply_ry(std::size_t q, double theta) { check_qubit(q); k::apply_ry(amplitudes_, q, theta); }
void Statevector::apply_rz(std::size_t q, double theta) { check_qubit(q); k::apply_rz(amplitudes_, q, theta); }

void Statevector::apply_cnot(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw ShapeError("cnot: control equals target");
  k::apply_cnot(amplitudes_, control, target);
}

void Statevector::apply_cz(std::size_t a, std::size_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw ShapeError("cz: qubits must differ");
  k::apply_cz(amplitudes_, a, b);
}

void Statevector::apply_pauli_rotation(const qubit::PauliString& p, double theta) {
  if (p.n_qubits != n_qubits_) throw ShapeError("pauli rotation: qubit count mismatch");
  k::apply_pauli_rotation(amplitudes_, p, theta);
}

std::string Statevector::to_csv() const {
  std::string out = "index,re,im\n";
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    out += fmt::format("{},{:.17g},{:.17g}\n", i, amplitudes_[i].real(), amplitudes_[i].imag());
  }
  return out;
}

Statevector prepare_hf(std::size_t n_qubits, const std::vector<std::size_t>& occupied) {
  Statevector s(n_qubits);
  for (std::size_t q : occupied) s.apply_x(q);
  return s;
}

double expectation(const Statevector& state, const qubit::QubitHamiltonian& h) {
  if (h.n_qubits() != state.n_qubits()) {
    throw ShapeError(fmt::format("expectation: Hamiltonian on {} qubits, state on {}", h.n_qubits(), state.n_qubits()));
  }
  return k::expectation(state.amplitudes(), h);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_indices(const Statevector& state, std::uint64_t n_shots,
                                                                    std::uint64_t seed) {
  if (n_shots == 0) throw Error("sample: n_shots must be >= 1");
  const auto amps = state.amplitudes();
  std::vector<double> cumulative(amps.size());
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    total += std::norm(amps[i]);
    cumulative[i] = total;
  }
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
    // 53-bit uniform in [0, 1); portable unlike uniform_real_distribution.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= amps.size()) idx = amps.size() - 1;
    ++counts[idx];
  }
  return {counts.begin(), counts.end()};
}

std::string bitstring(std::uint64_t index, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t j = 0; j < n_qubits; ++j) {
    if ((index >> j) & 1U) s[j] = '1';
  }
  return s;
}

std::vector<std::pair<std::string, std::uint64_t>> sample(const Statevector& state, std::uint64_t n_shots,
                                                          std::uint64_t seed) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& [idx, count] : sample_indices(state, n_shots, seed)) out.emplace_back(bitstring(idx, state.n_qubits()), count);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vqechem::sim
