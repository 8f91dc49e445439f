// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/qubit/fermion_operator.hpp"

#include <algorithm>
#include <cmath>

namespace vqechem::qubit {

namespace {

void normal_order_into(LadderString ops, double coefficient, std::map<LadderString, double>& out) {
  if (coefficient == 0.0) return;
  // Move annihilators right of creators: a_p a+_q = delta_pq - a+_q a_p.
  for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
    if (!ops[k].dagger && ops[k + 1].dagger) {
      if (ops[k].mode == ops[k + 1].mode) {
        LadderString contracted;
        contracted.reserve(ops.size() - 2);
        contracted.insert(contracted.end(), ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(k));
        contracted.insert(contracted.end(), ops.begin() + static_cast<std::ptrdiff_t>(k + 2), ops.end());
        normal_order_into(std::move(contracted), coefficient, out);
      }
      std::swap(ops[k], ops[k + 1]);
      normal_order_into(std::move(ops), -coefficient, out);
      return;
    }
  }
  // Sort each block by descending mode; a repeated mode annihilates the term.
  const auto n_create = static_cast<std::size_t>(std::count_if(ops.begin(), ops.end(), [](auto o) { return o.dagger; }));
  double sign = 1.0;
  auto sort_block = [&](std::size_t begin, std::size_t end) -> bool {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = begin; j + 1 < end; ++j) {
        if (ops[j].mode < ops[j + 1].mode) {
          std::swap(ops[j], ops[j + 1]);
          sign = -sign;
        }
      }
    for (std::size_t j = begin; j + 1 < end; ++j) {
      if (ops[j].mode == ops[j + 1].mode) return false;
    }
    return true;
  };
  if (!sort_block(0, n_create) || !sort_block(n_create, ops.size())) return;
  out[ops] += sign * coefficient;
}

}  // namespace

void FermionOperator::add(const LadderString& ops, double coefficient) { normal_order_into(ops, coefficient, terms_); }

void FermionOperator::add(const FermionOperator& other, double scale) {
  for (const auto& [ops, c] : other.terms_) terms_[ops] += scale * c;
}

std::size_t FermionOperator::n_modes() const {
  std::size_t n = 0;
  for (const auto& [ops, c] : terms_)
    for (const auto& o : ops) n = std::max<std::size_t>(n, o.mode + 1);
  return n;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const auto& [ops, c] : terms_) {
    LadderString reversed(ops.rbegin(), ops.rend());
    for (auto& o : reversed) o.dagger = !o.dagger;
    out.add(reversed, c);
  }
  return out;
}

bool FermionOperator::is_hermitian(double tolerance) const {
  FermionOperator diff = *this;
  diff.add(adjoint(), -1.0);
  return std::all_of(diff.terms_.begin(), diff.terms_.end(),
                     [&](const auto& kv) { return std::abs(kv.second) <= tolerance; });
}

void FermionOperator::prune(double tolerance) {
  std::erase_if(terms_, [&](const auto& kv) { return std::abs(kv.second) < tolerance; });
}

FermionOperator build_second_quantized(const chem::MolecularIntegrals& integrals) {
  integrals.validate();
  const std::size_t n = integrals.n_spatial_orbitals;
  FermionOperator op;
  if (integrals.constant_energy != 0.0) op.add(LadderString{}, integrals.constant_energy);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const double hpq = integrals.h(p, q);
      if (hpq == 0.0) continue;
      for (int s = 0; s < 2; ++s) op.add({cr(spin_orbital(p, s)), an(spin_orbital(q, s))}, hpq);
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double prqs = integrals.g(p, r, q, s);  // <pq|rs> = (pr|qs)
          if (prqs == 0.0) continue;
          for (int sp = 0; sp < 2; ++sp)
            for (int sq = 0; sq < 2; ++sq) {
              if (p == q && sp == sq) continue;
              if (r == s && sp == sq) continue;
              op.add({cr(spin_orbital(p, sp)), cr(spin_orbital(q, sq)), an(spin_orbital(s, sq)), an(spin_orbital(r, sp))},
                     0.5 * prqs);
            }
        }
  op.prune(1e-14);
  return op;
}

FermionOperator number_operator(std::size_t n_modes) {
  FermionOperator op;
  for (std::size_t p = 0; p < n_modes; ++p) op.add({cr(static_cast<std::uint32_t>(p)), an(static_cast<std::uint32_t>(p))}, 1.0);
  return op;
}

}  // namespace vqechem::qubit
