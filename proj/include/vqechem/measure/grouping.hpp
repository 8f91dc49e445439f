// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vqechem/qubit/qubit_hamiltonian.hpp"
#include "vqechem/sim/statevector.hpp"

namespace vqechem::measure {

/// Term indices measurable in one product basis. `basis` holds, per qubit, the
/// unique non-identity letter used by the group there (I if unused).
struct MeasurementGroup {
  std::vector<std::size_t> terms;
  qubit::PauliString basis;
};

/// Greedy colouring of the graph whose edges join terms that do not commute
/// qubit-wise. Vertices are coloured in order of decreasing degree, ties by
/// term index; each vertex takes the smallest colour free among its neighbours.
std::vector<MeasurementGroup> group_commuting(const qubit::QubitHamiltonian& h);

/// Grouping report: `group_id,n_terms,basis_string` with a header line.
std::string grouping_csv(const std::vector<MeasurementGroup>& groups);

struct EnergyEstimate {
  double energy = 0.0;
  double standard_error = 0.0;
  std::uint64_t shots_used = 0;
};

enum class ShotAllocation {
  kUniform,   // shots_per_group for every group
  kWeighted,  // total budget split in proportion to sum_k |w_k| per group
};

/// Samples each group in its rotated basis (H for X, S^dagger then H for Y)
/// and averages +/-1 parities. Group g uses seed + g. The error estimate
/// treats groups as independent and ignores within-group covariances.
EnergyEstimate estimate_energy_sampled(const sim::Statevector& state, const qubit::QubitHamiltonian& h,
                                       const std::vector<MeasurementGroup>& groups, std::uint64_t shots_per_group,
                                       std::uint64_t seed, ShotAllocation allocation = ShotAllocation::kUniform);

/// One group per term (no grouping), for comparison runs.
std::vector<MeasurementGroup> singleton_groups(const qubit::QubitHamiltonian& h);

}  // namespace vqechem::measure
