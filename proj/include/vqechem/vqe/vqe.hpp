// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vqechem/measure/grouping.hpp"
#include "vqechem/qubit/qubit_hamiltonian.hpp"
#include "vqechem/sim/circuit.hpp"
#include "vqechem/vqe/optimizer.hpp"

namespace vqechem::vqe {

enum class EstimatorMode { kExact, kSampled };

std::string to_string(EstimatorMode mode);
/// Accepts "exact" or "sampled".
EstimatorMode parse_estimator_mode(const std::string& name);

struct EstimatorConfig {
  EstimatorMode mode = EstimatorMode::kExact;
  std::uint64_t shots_per_group = 1000;
  /// Evaluation e samples with a seed derived from (seed, e).
  std::uint64_t seed = 11;
  measure::ShotAllocation allocation = measure::ShotAllocation::kUniform;
};

/// Energy functional theta -> <HF| U(theta)^dagger H U(theta) |HF>. In sampled
/// mode every call draws fresh shots, so the object is stateful and not
/// thread-safe.
class EnergyObjective {
 public:
  EnergyObjective(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit, std::vector<std::size_t> hf_occupied,
                  EstimatorConfig estimator);

  double operator()(std::span<const double> theta);
  /// Exact expectation regardless of mode.
  double exact(std::span<const double> theta) const;

  std::size_t n_groups() const noexcept { return groups_.size(); }
  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  const qubit::QubitHamiltonian& h_;
  const sim::Circuit& circuit_;
  std::vector<std::size_t> occupied_;
  EstimatorConfig estimator_;
  std::vector<measure::MeasurementGroup> groups_;
  std::uint64_t evaluations_ = 0;
};

/// One optimisation from theta0 (zeros when empty).
VqeResult run_vqe(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                  const std::vector<std::size_t>& hf_occupied, const OptimizerConfig& config,
                  const EstimatorConfig& estimator, std::vector<double> theta0 = {});

struct MultiStartResult {
  VqeResult best;
  std::size_t best_index = 0;
  std::vector<VqeResult> runs;
};

/// Uniform values in [-spread, spread] from mt19937_64(seed).
std::vector<double> random_parameters(std::size_t n, double spread, std::uint64_t seed);

/// Run r uses optimizer seed config.seed + r and estimator seed
/// estimator.seed + r; run 0 starts at theta0, run r > 0 at theta0 plus
/// random_parameters(n, 0.1, config.seed + r). Runs are independent and may
/// execute concurrently; the lowest final energy wins (ties: lowest index).
MultiStartResult run_vqe_restarts(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                                  const std::vector<std::size_t>& hf_occupied, const OptimizerConfig& config,
                                  const EstimatorConfig& estimator, std::size_t n_restarts,
                                  std::vector<double> theta0 = {});

/// Exact dE/dtheta by the two-term shift rule applied to every gate that
/// references a slot, chained through each gate's scale.
std::vector<double> parameter_shift_gradient(const qubit::QubitHamiltonian& h, const sim::Circuit& circuit,
                                             const std::vector<std::size_t>& hf_occupied,
                                             std::span<const double> theta);

}  // namespace vqechem::vqe
