// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/measure/grouping.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "vqechem/error.hpp"

namespace vqechem::measure {

namespace {

qubit::PauliString group_basis(const qubit::QubitHamiltonian& h, const std::vector<std::size_t>& terms) {
  qubit::PauliString basis = qubit::PauliString::identity(h.n_qubits());
  for (std::size_t t : terms) {
    const auto& p = h.terms()[t].string;
    basis.x |= p.x;
    basis.z |= p.z;
  }
  return basis;
}

}  // namespace

std::vector<MeasurementGroup> group_commuting(const qubit::QubitHamiltonian& h) {
  const std::size_t n = h.size();
  if (n == 0) throw Error("group_commuting: empty Hamiltonian");
  const auto& terms = h.terms();

  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!qubit::commutes_qubitwise(terms[a].string, terms[b].string)) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
      }
    }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return adjacency[a].size() > adjacency[b].size(); });

  constexpr std::size_t kUncoloured = static_cast<std::size_t>(-1);
  std::vector<std::size_t> colour(n, kUncoloured);
  std::size_t n_colours = 0;
  std::vector<bool> taken;
  for (std::size_t v : order) {
    taken.assign(n_colours + 1, false);
    for (std::size_t u : adjacency[v]) {
      if (colour[u] != kUncoloured) taken[colour[u]] = true;
    }
    std::size_t c = 0;
    while (taken[c]) ++c;
    colour[v] = c;
    n_colours = std::max(n_colours, c + 1);
  }

  std::vector<MeasurementGroup> groups(n_colours);
  for (std::size_t t = 0; t < n; ++t) groups[colour[t]].terms.push_back(t);
  for (auto& g : groups) g.basis = group_basis(h, g.terms);
  return groups;
}

std::vector<MeasurementGroup> singleton_groups(const qubit::QubitHamiltonian& h) {
  std::vector<MeasurementGroup> groups;
  for (std::size_t t = 0; t < h.size(); ++t) groups.push_back({{t}, h.terms()[t].string});
  return groups;
}

std::string grouping_csv(const std::vector<MeasurementGroup>& groups) {
  std::string out = "group_id,n_terms,basis_string\n";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    out += fmt::format("{},{},{}\n", g, groups[g].terms.size(), groups[g].basis.str());
  }
  return out;
}

EnergyEstimate estimate_energy_sampled(const sim::Statevector& state, const qubit::QubitHamiltonian& h,
                                       const std::vector<MeasurementGroup>& groups, std::uint64_t shots_per_group,
                                       std::uint64_t seed, ShotAllocation allocation) {
  if (shots_per_group == 0) throw Error("estimate_energy_sampled: shots_per_group must be >= 1");
  if (h.n_qubits() != state.n_qubits()) throw ShapeError("estimate_energy_sampled: qubit count mismatch");
  std::vector<bool> seen(h.size(), false);
  for (const auto& g : groups) {
    if (g.basis.n_qubits != h.n_qubits()) throw ShapeError("measurement group basis has the wrong qubit count");
    for (std::size_t t : g.terms) {
      if (t >= h.size() || seen[t]) throw ShapeError("measurement groups do not partition the Hamiltonian terms");
      seen[t] = true;
      const auto& p = h.terms()[t].string;
      const std::uint64_t overlap = p.support() & g.basis.support();
      if (overlap != p.support() || ((p.x ^ g.basis.x) & overlap) || ((p.z ^ g.basis.z) & overlap)) {
        throw ShapeError("term is not diagonal in its group's measurement basis");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ShapeError("measurement groups do not cover every Hamiltonian term");
  }

  // Per-group shot budget.
  std::vector<std::uint64_t> shots(groups.size(), shots_per_group);
  if (allocation == ShotAllocation::kWeighted) {
    std::vector<double> weight(groups.size(), 0.0);
    double total = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (groups[g].basis.is_identity()) continue;
      for (std::size_t t : groups[g].terms) weight[g] += std::abs(h.terms()[t].coefficient);
      total += weight[g];
    }
    std::size_t n_measured = 0;
    for (const auto& g : groups) n_measured += g.basis.is_identity() ? 0 : 1;
    const double budget = static_cast<double>(shots_per_group * n_measured);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      shots[g] = total > 0.0 ? std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(budget * weight[g] / total)))
                             : shots_per_group;
    }
  }

  EnergyEstimate est;
  double variance = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& group = groups[g];
    if (group.basis.is_identity()) {
      for (std::size_t t : group.terms) est.energy += h.terms()[t].coefficient;
      continue;
    }
    sim::Statevector rotated = state;
    for (std::size_t q = 0; q < h.n_qubits(); ++q) {
      switch (group.basis.letter(q)) {
        case 'X': rotated.apply_h(q); break;
        case 'Y': rotated.apply_sdg(q); rotated.apply_h(q); break;
        default: break;
      }
    }
    const auto counts = sim::sample_indices(rotated, shots[g], seed + g);
    const double n_shots = static_cast<double>(shots[g]);
    for (std::size_t t : group.terms) {
      const auto& term = h.terms()[t];
      if (term.string.is_identity()) {
        est.energy += term.coefficient;
        continue;
      }
      const std::uint64_t mask = term.string.support();
      double sum = 0.0;
      for (const auto& [idx, count] : counts) {
        sum += (std::popcount(idx & mask) & 1 ? -1.0 : 1.0) * static_cast<double>(count);
      }
      const double mean = sum / n_shots;
      est.energy += term.coefficient * mean;
      variance += term.coefficient * term.coefficient * std::max(0.0, 1.0 - mean * mean) / n_shots;
    }
    est.shots_used += shots[g];
  }
  est.standard_error = std::sqrt(variance);
  return est;
}

}  // namespace vqechem::measure
