// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "vqechem/ansatz/ansatz.hpp"
#include "vqechem/error.hpp"
#include "vqechem/exactdiag/exactdiag.hpp"
#include "vqechem/qubit/jordan_wigner.hpp"
#include "vqechem/vqe/vqe.hpp"
#include "vqechem/workflow/pipeline.hpp"

using namespace vqechem;
using namespace vqechem::vqe;
using qubit::PauliString;
using qubit::QubitHamiltonian;

namespace {

QubitHamiltonian h2_hamiltonian(double r) {
  return qubit::molecular_qubit_hamiltonian(
      workflow::integrals_from_molecule(chem::hydrogen_chain({r}, units::LengthUnit::kAngstrom)));
}

QubitHamiltonian toy() {
  return QubitHamiltonian::from_terms(2, {{-0.5, PauliString::from_letters("ZI")},
                                          {-0.3, PauliString::from_letters("IZ")},
                                          {0.2, PauliString::from_letters("XX")},
                                          {0.1, PauliString::from_letters("ZZ")}});
}

}  // namespace

TEST_CASE("an empty circuit returns the Hartree-Fock energy") {
  const auto h = h2_hamiltonian(0.74);
  const sim::Circuit empty(4, 0);
  const auto r = run_vqe(h, empty, {0, 1}, {}, {});
  CHECK(r.n_function_evaluations == 1);
  CHECK(r.termination == Termination::kNoParameters);
  CHECK(std::abs(r.final_energy - sim::expectation(sim::prepare_hf(4, {0, 1}), h)) < 1e-14);
}

TEST_CASE("SPSA with a hardware-efficient ansatz on a two-qubit toy") {
  const auto h = toy();
  const double exact = exactdiag::ground_state_energy(h).energy;
  const auto circuit = ansatz::build_hardware_efficient(2, 1);
  std::vector<double> errors;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    OptimizerConfig cfg;
    cfg.kind = OptimizerKind::kSpsa;
    cfg.seed = seed;
    cfg.max_iterations = 1000;
    const auto r = run_vqe(h, circuit, {}, cfg, {}, random_parameters(circuit.n_parameters(), 0.5, seed));
    errors.push_back(r.final_energy - exact);
    CHECK(r.final_energy >= exact - 1e-12);
  }
  std::nth_element(errors.begin(), errors.begin() + 5, errors.end());
  CHECK(errors[5] < 1e-2);
}

TEST_CASE("H2 UCCSD reaches the exact ground state") {
  const auto h = h2_hamiltonian(0.74);
  const double exact = exactdiag::ground_state_energy(h).energy;
  const auto circuit = ansatz::build_uccsd(4, {0, 1});
  OptimizerConfig cfg;
  cfg.convergence_threshold = 1e-12;
  cfg.max_iterations = 2000;
  const auto r = run_vqe(h, circuit, {0, 1}, cfg, {});
  CHECK(std::abs(r.final_energy - exact) < 1e-6);
  for (double e : r.evaluations) CHECK(e >= exact - 1e-12);
  const auto again = run_vqe(h, circuit, {0, 1}, cfg, {});
  CHECK(again.energy_trace == r.energy_trace);
  CHECK(again.final_parameters == r.final_parameters);
}

TEST_CASE("restarts keep the best run") {
  const auto h = h2_hamiltonian(1.2);
  const auto circuit = ansatz::build_uccsd(4, {0, 1});
  OptimizerConfig cfg;
  cfg.kind = OptimizerKind::kSpsa;
  cfg.max_iterations = 60;
  const auto m = run_vqe_restarts(h, circuit, {0, 1}, cfg, {}, 4);
  REQUIRE(m.runs.size() == 4);
  for (const auto& run : m.runs) CHECK(m.best.final_energy <= run.final_energy);
  CHECK(m.best.final_energy == m.runs[m.best_index].final_energy);
  CHECK(run_vqe_restarts(h, circuit, {0, 1}, cfg, {}, 4).best.energy_trace == m.best.energy_trace);
  CHECK_THROWS(run_vqe_restarts(h, circuit, {0, 1}, cfg, {}, 0));
}

TEST_CASE("sampled estimator") {
  const auto h = h2_hamiltonian(0.74);
  const auto circuit = ansatz::build_uccsd(4, {0, 1});
  EstimatorConfig est;
  est.mode = EstimatorMode::kSampled;
  est.shots_per_group = 2000;
  EnergyObjective objective(h, circuit, {0, 1}, est);
  const std::vector<double> theta = {0.01, -0.02, 0.1};
  const double a = objective(theta);
  const double b = objective(theta);
  CHECK(a != b);
  CHECK(objective.evaluations() == 2);
  CHECK(std::abs(a - objective.exact(theta)) < 0.05);
  CHECK(objective.n_groups() >= 2);

  EnergyObjective replay(h, circuit, {0, 1}, est);
  CHECK(replay(theta) == a);

  OptimizerConfig cfg;
  cfg.max_iterations = 50;
  const auto r1 = run_vqe(h, circuit, {0, 1}, cfg, est);
  const auto r2 = run_vqe(h, circuit, {0, 1}, cfg, est);
  CHECK(r1.energy_trace == r2.energy_trace);
  CHECK(parse_estimator_mode("sampled") == EstimatorMode::kSampled);
  CHECK_THROWS(parse_estimator_mode("noisy"));
}

TEST_CASE("shape checks") {
  const auto h = h2_hamiltonian(0.74);
  const auto circuit = ansatz::build_uccsd(4, {0, 1});
  CHECK_THROWS_AS(run_vqe(h, ansatz::build_uccsd(6, {0, 1}), {0, 1}, {}, {}), ShapeError);
  CHECK_THROWS_AS(run_vqe(h, circuit, {0, 1}, {}, {}, {0.0}), ShapeError);
  CHECK_THROWS_AS(run_vqe(h, circuit, {7}, {}, {}), ShapeError);
  const auto p = random_parameters(5, 0.1, 3);
  CHECK(p.size() == 5);
  for (double x : p) CHECK(std::abs(x) <= 0.1);
  CHECK(random_parameters(5, 0.1, 3) == p);
}
