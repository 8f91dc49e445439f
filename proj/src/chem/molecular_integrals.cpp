// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/chem/molecular_integrals.hpp"

#include <cmath>
#include <string>

#include "vqechem/error.hpp"

namespace vqechem::chem {

void MolecularIntegrals::validate(double tolerance) const {
  const auto n = static_cast<Eigen::Index>(n_spatial_orbitals);
  if (h.rows() != n || h.cols() != n || g.dim() != n_spatial_orbitals) {
    throw ShapeError("molecular integrals: h/g dimensions disagree with n_spatial_orbitals");
  }
  if (!std::isfinite(constant_energy) || !h.allFinite()) throw FormatError("molecular integrals: non-finite entry");
  for (double v : g.data()) {
    if (!std::isfinite(v)) throw FormatError("molecular integrals: non-finite two-electron entry");
  }
  if (n > 0 && (h - h.transpose()).cwiseAbs().maxCoeff() > tolerance) {
    throw FormatError("molecular integrals: one-body matrix is not symmetric");
  }
  if (g.symmetry_error() > tolerance) throw FormatError("molecular integrals: two-body tensor lacks 8-fold symmetry");
}

MolecularIntegrals transform_to_mo(const AOIntegrals& ao, const RhfResult& rhf, int n_electrons) {
  const Eigen::MatrixXd& c = rhf.mo_coefficients;
  const std::size_t n_ao = ao.n_ao;
  if (static_cast<std::size_t>(c.rows()) != n_ao || ao.eri.dim() != n_ao ||
      static_cast<std::size_t>(ao.overlap.rows()) != n_ao) {
    throw ShapeError("transform_to_mo: coefficient matrix does not match the AO dimension");
  }
  if (!rhf.converged) throw Error("transform_to_mo: RHF result is not converged");
  const std::size_t n = static_cast<std::size_t>(c.cols());

  MolecularIntegrals mo;
  mo.n_spatial_orbitals = n;
  mo.n_electrons = n_electrons;
  mo.constant_energy = ao.e_nuc;
  mo.h = c.transpose() * ao.core_hamiltonian() * c;
  mo.h = 0.5 * (mo.h + mo.h.transpose());

  // Quarter transforms; each loop nest writes disjoint output rows.
  Tensor4 t1(std::max(n, n_ao)), t2(std::max(n, n_ao)), t3(std::max(n, n_ao));
  const auto& eri = ao.eri;
#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t b = 0; b < n_ao; ++b)
      for (std::size_t cc = 0; cc < n_ao; ++cc)
        for (std::size_t d = 0; d < n_ao; ++d) {
          double acc = 0.0;
          for (std::size_t a = 0; a < n_ao; ++a) acc += c(a, p) * eri(a, b, cc, d);
          t1(p, b, cc, d) = acc;
        }
#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t cc = 0; cc < n_ao; ++cc)
        for (std::size_t d = 0; d < n_ao; ++d) {
          double acc = 0.0;
          for (std::size_t b = 0; b < n_ao; ++b) acc += c(b, q) * t1(p, b, cc, d);
          t2(p, q, cc, d) = acc;
        }
#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t d = 0; d < n_ao; ++d) {
          double acc = 0.0;
          for (std::size_t cc = 0; cc < n_ao; ++cc) acc += c(cc, r) * t2(p, q, cc, d);
          t3(p, q, r, d) = acc;
        }
  mo.g = Tensor4(n);
#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          double acc = 0.0;
          for (std::size_t d = 0; d < n_ao; ++d) acc += c(d, s) * t3(p, q, r, d);
          mo.g(p, q, r, s) = acc;
        }
  // Symmetrize away round-off so the stored tensor is exactly 8-fold symmetric.
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const auto& g = mo.g;
          const double avg = (g(p, q, r, s) + g(q, p, r, s) + g(p, q, s, r) + g(q, p, s, r) + g(r, s, p, q) +
                              g(s, r, p, q) + g(r, s, q, p) + g(s, r, q, p)) /
                             8.0;
          mo.g.set_symmetric(p, q, r, s, avg);
        }
  return mo;
}

double closed_shell_energy(const MolecularIntegrals& integrals) {
  const std::size_t n_occ = static_cast<std::size_t>(integrals.n_electrons / 2);
  double e = integrals.constant_energy;
  for (std::size_t i = 0; i < n_occ; ++i) {
    e += 2.0 * integrals.h(i, i);
    for (std::size_t j = 0; j < n_occ; ++j) e += 2.0 * integrals.g(i, i, j, j) - integrals.g(i, j, j, i);
  }
  return e;
}

}  // namespace vqechem::chem
