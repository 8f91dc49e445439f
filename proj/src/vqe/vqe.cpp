// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/vqe/vqe.hpp"

#include <exception>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "vqechem/error.hpp"
#include "vqechem/sim/statevector.hpp"

namespace vqechem::vqe {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void check_shapes(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                  const std::vector<std::size_t>& occupied) {
  if (h.n_qubits() != circuit.n_qubits()) {
    throw ShapeError(fmt::format("Hamiltonian has {} qubits, circuit has {}", h.n_qubits(), circuit.n_qubits()));
  }
  for (std::size_t q : occupied)
    if (q >= h.n_qubits()) throw ShapeError(fmt::format("occupied orbital {} out of range", q));
}

double circuit_energy(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                      const std::vector<std::size_t>& occupied, std::span<const double> theta) {
  const auto psi = sim::apply_circuit(sim::prepare_hf(circuit.n_qubits(), occupied), circuit, theta);
  return sim::expectation(psi, h);
}

}  // namespace

std::string to_string(EstimatorMode mode) { return mode == EstimatorMode::kExact ? "exact" : "sampled"; }

EstimatorMode parse_estimator_mode(const std::string& name) {
  if (name == "exact") return EstimatorMode::kExact;
  if (name == "sampled") return EstimatorMode::kSampled;
  throw Error(fmt::format("unknown mode '{}' (expected exact or sampled)", name));
}

EnergyObjective::EnergyObjective(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                                 std::vector<std::size_t> hf_occupied, EstimatorConfig estimator)
    : h_(h), circuit_(circuit), occupied_(std::move(hf_occupied)), estimator_(estimator) {
  check_shapes(h_, circuit_, occupied_);
  if (estimator_.mode == EstimatorMode::kSampled) {
    if (estimator_.shots_per_group == 0) throw Error("sampled mode needs shots >= 1");
    groups_ = measure::group_commuting(h_);
  }
}

double EnergyObjective::operator()(std::span<const double> theta) {
  const std::uint64_t index = evaluations_++;
  if (estimator_.mode == EstimatorMode::kExact) return exact(theta);
  const auto psi = sim::apply_circuit(sim::prepare_hf(circuit_.n_qubits(), occupied_), circuit_, theta);
  return measure::estimate_energy_sampled(psi, h_, groups_, estimator_.shots_per_group,
                                          splitmix64(estimator_.seed ^ splitmix64(index)), estimator_.allocation)
      .energy;
}

double EnergyObjective::exact(std::span<const double> theta) const {
  return circuit_energy(h_, circuit_, occupied_, theta);
}

VqeResult run_vqe(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                  const std::vector<std::size_t>& hf_occupied, const OptimizerConfig& config,
                  const EstimatorConfig& estimator, std::vector<double> theta0) {
  circuit.validate();
  if (theta0.empty()) theta0.assign(circuit.n_parameters(), 0.0);
  if (theta0.size() != circuit.n_parameters()) {
    throw ShapeError(fmt::format("{} initial parameters for a {}-parameter circuit", theta0.size(),
                                 circuit.n_parameters()));
  }
  EnergyObjective objective(h, circuit, hf_occupied, estimator);
  return minimize([&](std::span<const double> t) { return objective(t); }, std::move(theta0), config);
}

std::vector<double> random_parameters(std::size_t n, double spread, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = spread * (2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0);
  return out;
}

MultiStartResult run_vqe_restarts(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                                  const std::vector<std::size_t>& hf_occupied, const OptimizerConfig& config,
                                  const EstimatorConfig& estimator, std::size_t n_restarts,
                                  std::vector<double> theta0) {
  if (n_restarts < 1) throw Error("run_vqe_restarts: need at least one run");
  if (theta0.empty()) theta0.assign(circuit.n_parameters(), 0.0);
  MultiStartResult out;
  out.runs.resize(n_restarts);
  std::vector<std::exception_ptr> errors(n_restarts);
  const auto n = static_cast<std::int64_t>(n_restarts);
#pragma omp parallel for schedule(dynamic) if (n_restarts > 1)
  for (std::int64_t ri = 0; ri < n; ++ri) {
    const auto r = static_cast<std::size_t>(ri);
    try {
      OptimizerConfig cfg = config;
      cfg.seed = config.seed + r;
      EstimatorConfig est = estimator;
      est.seed = estimator.seed + r;
      std::vector<double> start = theta0;
      if (r > 0) {
        const auto jitter = random_parameters(start.size(), 0.1, config.seed + r);
        for (std::size_t i = 0; i < start.size(); ++i) start[i] += jitter[i];
      }
      out.runs[r] = run_vqe(h, circuit, hf_occupied, cfg, est, std::move(start));
    } catch (...) {
      errors[r] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t r = 1; r < n_restarts; ++r)
    if (out.runs[r].final_energy < out.runs[out.best_index].final_energy) out.best_index = r;
  out.best = out.runs[out.best_index];
  return out;
}

std::vector<double> parameter_shift_gradient(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                                             const std::vector<std::size_t>& hf_occupied,
                                             std::span<const double> theta) {
  check_shapes(h, circuit, hf_occupied);
  if (theta.size() != circuit.n_parameters()) throw ShapeError("parameter_shift_gradient: parameter count mismatch");
  std::vector<double> grad(circuit.n_parameters(), 0.0);
  const auto& gates = circuit.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    if (!gates[g].parameterized()) continue;
    double shifted[2];
    for (int side = 0; side < 2; ++side) {
      sim::Circuit c(circuit.n_qubits(), circuit.n_parameters());
      for (std::size_t k = 0; k < gates.size(); ++k) {
        sim::Gate gate = gates[k];
        if (k == g) gate.offset += (side == 0 ? 0.5 : -0.5) * std::numbers::pi;
        c.add(std::move(gate));
      }
      shifted[side] = circuit_energy(h, c, hf_occupied, theta);
    }
    grad[*gates[g].slot] += gates[g].scale * 0.5 * (shifted[0] - shifted[1]);
  }
  return grad;
}

}  // namespace vqechem::vqe
