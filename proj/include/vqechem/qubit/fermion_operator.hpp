// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "vqechem/chem/molecular_integrals.hpp"

namespace vqechem::qubit {

struct LadderOp {
  std::uint32_t mode = 0;
  bool dagger = false;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

using LadderString = std::vector<LadderOp>;

inline LadderOp cr(std::uint32_t mode) { return {mode, true}; }
inline LadderOp an(std::uint32_t mode) { return {mode, false}; }

/// Real linear combination of normal-ordered ladder strings. Normal order:
/// creators left of annihilators, each block sorted by descending mode.
class FermionOperator {
 public:
  FermionOperator() = default;

  /// Adds coefficient * (product of ops, left to right), normal-ordering it
  /// with the canonical anticommutation relations.
  void add(const LadderString& ops, double coefficient);
  void add(const FermionOperator& other, double scale = 1.0);

  const std::map<LadderString, double>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest mode index + 1 (0 when only a constant is present).
  std::size_t n_modes() const;

  FermionOperator adjoint() const;
  bool is_hermitian(double tolerance = 1e-12) const;

  /// Drops terms with |coefficient| < tolerance.
  void prune(double tolerance);

 private:
  std::map<LadderString, double> terms_;
};

/// Spin-orbital index for spatial orbital p and spin (0 alpha, 1 beta):
/// interleaved, 2p + spin.
constexpr std::uint32_t spin_orbital(std::size_t spatial, int spin) {
  return static_cast<std::uint32_t>(2 * spatial + spin);
}

/// H = c + sum_pq h_pq a+_p a_q + 1/2 sum <pq|rs> a+_p a+_q a_s a_r over spin
/// orbitals, with <pq|rs> = (pr|qs) delta(s_p, s_r) delta(s_q, s_s).
FermionOperator build_second_quantized(const chem::MolecularIntegrals& integrals);

/// Total number operator sum_p a+_p a_p over n_modes.
FermionOperator number_operator(std::size_t n_modes);

}  // namespace vqechem::qubit
