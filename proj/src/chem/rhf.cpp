// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/chem/rhf.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "vqechem/error.hpp"

namespace vqechem::chem {

namespace {

// Two-electron part of the closed-shell Fock matrix: G = J[P] - K[P]/2.
Eigen::MatrixXd two_electron_fock(const Tensor4& eri, const Eigen::MatrixXd& density) {
  const auto n = density.rows();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index mu = 0; mu < n; ++mu)
    for (Eigen::Index nu = 0; nu < n; ++nu) {
      double acc = 0.0;
      for (Eigen::Index la = 0; la < n; ++la)
        for (Eigen::Index si = 0; si < n; ++si)
          acc += density(la, si) * (eri(mu, nu, si, la) - 0.5 * eri(mu, la, si, nu));
      g(mu, nu) = acc;
    }
  return g;
}

}  // namespace

RhfResult run_rhf(const AOIntegrals& ao, int n_electrons, const RhfOptions& options) {
  const auto n = static_cast<Eigen::Index>(ao.n_ao);
  if (n_electrons < 0 || n_electrons % 2 != 0 || n_electrons > 2 * n) {
    throw Error("run_rhf: electron count must be even and at most 2*n_ao, got " + std::to_string(n_electrons));
  }
  const Eigen::Index n_occ = n_electrons / 2;
  const Eigen::MatrixXd hcore = ao.core_hamiltonian();

  // Symmetric orthogonalization X = S^{-1/2}.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_eig(ao.overlap);
  if (s_eig.eigenvalues().minCoeff() <= 1e-10) throw SingularGeometryError("run_rhf: overlap matrix is singular");
  const Eigen::MatrixXd x =
      s_eig.eigenvectors() * s_eig.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() * s_eig.eigenvectors().transpose();

  auto diagonalize = [&](const Eigen::MatrixXd& fock, RhfResult& out) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(x.transpose() * fock * x);
    out.mo_coefficients = x * eig.eigenvectors();
    out.orbital_energies.assign(eig.eigenvalues().data(), eig.eigenvalues().data() + n);
  };
  auto density_of = [&](const Eigen::MatrixXd& c) -> Eigen::MatrixXd {
    const auto occ = c.leftCols(n_occ);
    return 2.0 * occ * occ.transpose();
  };

  RhfResult result;
  diagonalize(hcore, result);
  Eigen::MatrixXd density = density_of(result.mo_coefficients);

  if (n_occ == 0) {
    result.total_energy = ao.e_nuc;
    result.converged = true;
    return result;
  }

  double energy = 0.0;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const Eigen::MatrixXd fock = hcore + two_electron_fock(ao.eri, density);
    energy = 0.5 * (density.cwiseProduct(hcore + fock)).sum() + ao.e_nuc;
    result.energy_trace.push_back(energy);

    diagonalize(fock, result);
    const Eigen::MatrixXd next = density_of(result.mo_coefficients);
    const double change = (next - density).cwiseAbs().maxCoeff();
    density = next;
    result.n_iterations = iter;
    if (change < options.density_tolerance) {
      // Energy of the converged density.
      const Eigen::MatrixXd final_fock = hcore + two_electron_fock(ao.eri, density);
      result.total_energy = 0.5 * (density.cwiseProduct(hcore + final_fock)).sum() + ao.e_nuc;
      result.converged = true;
      return result;
    }
  }
  throw ConvergenceError("run_rhf: SCF not converged after " + std::to_string(options.max_iterations) + " iterations",
                         energy);
}

}  // namespace vqechem::chem
