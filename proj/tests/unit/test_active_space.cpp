// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "vqechem/chem/active_space.hpp"
#include "vqechem/chem/fcidump.hpp"
#include "vqechem/error.hpp"
#include "vqechem/qubit/jordan_wigner.hpp"

using namespace vqechem;
using namespace vqechem::chem;

TEST_CASE("empty frozen set is the identity") {
  std::mt19937_64 rng(1);
  const auto m = oracle::random_integrals(3, 4, rng);
  const auto out = freeze_core(m, ActiveSpaceSpec::freeze({}, 3));
  CHECK(out.n_spatial_orbitals == 3);
  CHECK(out.n_electrons == 4);
  CHECK(out.constant_energy == m.constant_energy);
  CHECK((out.h - m.h).cwiseAbs().maxCoeff() == 0.0);
  CHECK(out.g(0, 1, 2, 1) == m.g(0, 1, 2, 1));
}

TEST_CASE("frozen-core spectrum equivalence on randomized instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    CAPTURE(trial);
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 2);
    const int n_el = trial % 4 < 2 ? 4 : 2 * static_cast<int>(n) - 2;
    const auto m = oracle::random_integrals(n, n_el, rng);
    const std::size_t frozen = trial % 3 == 0 && n_el >= 4 ? 1 : 0;
    const auto reduced = freeze_core(m, ActiveSpaceSpec::freeze({frozen}, n));
    CHECK(reduced.n_spatial_orbitals == n - 1);
    CHECK(reduced.n_electrons == n_el - 2);
    reduced.validate();

    const std::uint64_t forced = std::uint64_t{3} << (2 * frozen);
    const auto full = oracle::det_ci_eigenvalues(m, n_el, forced);
    const auto small = oracle::det_ci_eigenvalues(reduced, n_el - 2);
    REQUIRE(full.size() == small.size());
    CHECK((full - small).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("freezing two orbitals of an H2S fixture leaves 8 qubits") {
  const auto m = read_fcidump_file(testing::fixture("h2s_sto3g_nonrel_eq.fcidump"));
  const auto reduced = freeze_core(m, ActiveSpaceSpec::freeze({0, 1}, 6));
  CHECK(reduced.n_spatial_orbitals == 4);
  CHECK(reduced.n_electrons == 4);
  CHECK(qubit::molecular_qubit_hamiltonian(reduced).n_qubits() == 8);
}

TEST_CASE("active-space validation") {
  std::mt19937_64 rng(3);
  const auto m = oracle::random_integrals(3, 4, rng);
  CHECK_THROWS_AS(freeze_core(m, {{0}, {0, 1}}), SpecError);
  CHECK_THROWS_AS(freeze_core(m, {{0, 0}, {1, 2}}), SpecError);
  CHECK_THROWS_AS(freeze_core(m, {{0}, {1, 3}}), SpecError);
  CHECK_THROWS_AS(freeze_core(m, ActiveSpaceSpec::freeze({2}, 3)), SpecError);
  // explicit active subset drops the remaining virtual
  const auto sub = freeze_core(m, {{0}, {1}});
  CHECK(sub.n_spatial_orbitals == 1);
  CHECK(sub.n_electrons == 2);
}
