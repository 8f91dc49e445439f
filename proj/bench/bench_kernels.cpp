// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts.

#include <complex>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "vqechem/qubit/qubit_hamiltonian.hpp"
#include "vqechem/sim/kernels.hpp"

namespace {

using namespace vqechem;
namespace ks = sim::kernels::serial;
namespace ko = sim::kernels::omp;
using Amps = std::vector<std::complex<double>>;

Amps random_state(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Amps v(std::size_t{1} << n);
  for (auto& a : v) a = {g(rng), g(rng)};
  return v;
}

qubit::QubitHamiltonian random_hamiltonian(std::size_t n, std::size_t terms) {
  std::mt19937_64 rng(2);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::vector<qubit::PauliTerm> out;
  for (std::size_t t = 0; t < terms; ++t) out.push_back({0.1, qubit::PauliString(n, rng() & mask, rng() & mask)});
  return qubit::QubitHamiltonian::from_terms(n, out);
}

qubit::PauliString rotation_string(std::size_t n) {
  return qubit::PauliString(n, 0b1011, (std::uint64_t{1} << (n - 1)) | 0b0110);
}

template <auto Fn>
void pauli_rotation(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  auto psi = random_state(n);
  const auto p = rotation_string(n);
  for (auto _ : st) {
    Fn(psi, p, 0.3);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.size()));
}

template <auto Fn>
void ry(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  auto psi = random_state(n);
  for (auto _ : st) {
    Fn(psi, n / 2, 0.3);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.size()));
}

template <auto Fn>
void expectation(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto psi = random_state(n);
  const auto h = random_hamiltonian(n, 64);
  for (auto _ : st) benchmark::DoNotOptimize(Fn(psi, h));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.size() * h.size()));
}

template <auto Fn>
void apply_hamiltonian(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto psi = random_state(n);
  Amps out(psi.size());
  const auto h = random_hamiltonian(n, 64);
  for (auto _ : st) {
    Fn(h, psi, out);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.size() * h.size()));
}

}  // namespace

BENCHMARK(pauli_rotation<ks::apply_pauli_rotation>)->Name("serial/pauli_rotation")->DenseRange(12, 20, 4);
BENCHMARK(pauli_rotation<ko::apply_pauli_rotation>)->Name("omp/pauli_rotation")->DenseRange(12, 20, 4);
BENCHMARK(ry<ks::apply_ry>)->Name("serial/ry")->DenseRange(12, 20, 4);
BENCHMARK(ry<ko::apply_ry>)->Name("omp/ry")->DenseRange(12, 20, 4);
BENCHMARK(expectation<ks::expectation>)->Name("serial/expectation")->DenseRange(12, 18, 3);
BENCHMARK(expectation<ko::expectation>)->Name("omp/expectation")->DenseRange(12, 18, 3);
BENCHMARK(apply_hamiltonian<ks::apply_hamiltonian>)->Name("serial/apply_hamiltonian")->DenseRange(12, 18, 3);
BENCHMARK(apply_hamiltonian<ko::apply_hamiltonian>)->Name("omp/apply_hamiltonian")->DenseRange(12, 18, 3);

BENCHMARK_MAIN();
