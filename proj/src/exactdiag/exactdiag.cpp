// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/exactdiag/exactdiag.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "vqechem/error.hpp"
#include "vqechem/sim/kernels.hpp"

namespace vqechem::exactdiag {

namespace {

using Complex = std::complex<double>;

void check_size(const qubit::QubitHamiltonian& h, std::size_t size) {
  if (h.n_qubits() > sim::kMaxQubits) {
    throw ShapeError(fmt::format("{} qubits exceeds the {}-qubit limit", h.n_qubits(), sim::kMaxQubits));
  }
  if (size != (std::size_t{1} << h.n_qubits())) {
    throw ShapeError(fmt::format("vector length {} does not match {} qubits", size, h.n_qubits()));
  }
}

Complex dot(const Vector& a, const Vector& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Vector& a) { return std::sqrt(std::real(dot(a, a))); }

void axpy(Complex alpha, const Vector& x, Vector& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void scale(Vector& v, double s) {
  for (auto& a : v) a *= s;
}

double residual(const qubit::QubitHamiltonian& h, const Vector& v, double energy) {
  Vector r = apply_hamiltonian(h, v);
  axpy(-energy, v, r);
  return norm(r);
}

// H without its identity term, so the Krylov recurrence sees a spectrum
// centred near zero.
qubit::QubitHamiltonian traceless_part(const qubit::QubitHamiltonian& h) {
  std::vector<qubit::PauliTerm> terms;
  for (const auto& t : h.terms())
    if (!t.string.is_identity()) terms.push_back(t);
  return qubit::QubitHamiltonian::from_terms(h.n_qubits(), std::move(terms));
}

GroundStateResult solve_dense(const qubit::QubitHamiltonian& h, const GroundStateOptions& options) {
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : h.terms()) {
    for (std::size_t b = 0; b < dim; ++b) {
      m(static_cast<Eigen::Index>(b ^ t.string.x), static_cast<Eigen::Index>(b)) +=
          t.coefficient * qubit::basis_phase(t.string, b);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed", 0.0);
  GroundStateResult result;
  result.method = Method::kDense;
  result.energy = solver.eigenvalues()(0);
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = solver.eigenvectors()(static_cast<Eigen::Index>(i), 0);
  result.residual_norm = residual(h, v, result.energy);
  result.iterations = 1;
  if (options.keep_eigenvector) result.eigenvector = sim::Statevector::from_amplitudes(std::move(v));
  return result;
}

GroundStateResult solve_lanczos(const qubit::QubitHamiltonian& h, const GroundStateOptions& options) {
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  const double shift = h.identity_coefficient();
  const qubit::QubitHamiltonian op = traceless_part(h);

  Vector start(dim);
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  for (auto& a : start) {
    const double re = normal(rng);
    a = Complex(re, normal(rng));
  }
  scale(start, 1.0 / norm(start));

  const std::size_t m_max = std::max<std::size_t>(2, std::min(options.krylov_dim, dim));
  double best_energy = std::numeric_limits<double>::infinity();
  double best_residual = std::numeric_limits<double>::infinity();
  std::size_t total_iterations = 0;

  for (std::size_t restart = 0; restart <= options.max_restarts; ++restart) {
    std::vector<Vector> basis;
    std::vector<double> alpha, beta;
    basis.push_back(start);
    Vector ritz;
    double theta = 0.0;

    for (std::size_t j = 0; j < m_max; ++j) {
      Vector w = apply_hamiltonian(op, basis[j]);
      alpha.push_back(std::real(dot(basis[j], w)));
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& v : basis) axpy(-dot(v, w), v, w);
      const double b = norm(w);
      ++total_iterations;

      const std::size_t k = alpha.size();
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      for (std::size_t i = 0; i < k; ++i) {
        t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = alpha[i];
        if (i + 1 < k) {
          t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = beta[i];
          t(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = beta[i];
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(t);
      theta = tri.eigenvalues()(0);
      const double estimate = std::abs(b * tri.eigenvectors()(static_cast<Eigen::Index>(k - 1), 0));
      const bool exhausted = b < 1e-13 || j + 1 == m_max;
      if (estimate < 0.1 * options.residual_tolerance || exhausted) {
        ritz.assign(dim, 0.0);
        for (std::size_t i = 0; i < k; ++i) axpy(tri.eigenvectors()(static_cast<Eigen::Index>(i), 0), basis[i], ritz);
        scale(ritz, 1.0 / norm(ritz));
        const double res = residual(op, ritz, theta);
        if (res < best_residual) {
          best_residual = res;
          best_energy = theta + shift;
        }
        if (res < options.residual_tolerance) {
          GroundStateResult result;
          result.method = Method::kLanczos;
          result.energy = theta + shift;
          result.residual_norm = res;
          result.iterations = total_iterations;
          if (options.keep_eigenvector) result.eigenvector = sim::Statevector::from_amplitudes(std::move(ritz));
          return result;
        }
        break;
      }
      beta.push_back(b);
      scale(w, 1.0 / b);
      basis.push_back(std::move(w));
    }
    start = std::move(ritz);
  }
  throw IterationLimitError(
      fmt::format("Lanczos did not reach residual {:.1e} (best {:.3e})", options.residual_tolerance, best_residual),
      best_energy);
}

}  // namespace

Vector apply_hamiltonian(const qubit::QubitHamiltonian& h, const Vector& v) {
  check_size(h, v.size());
  Vector out(v.size());
  sim::kernels::omp::apply_hamiltonian(h, v, out);
  return out;
}

GroundStateResult ground_state_energy(const qubit::QubitHamiltonian& h, const GroundStateOptions& options) {
  if (h.n_qubits() == 0) throw ShapeError("ground_state_energy: zero-qubit Hamiltonian");
  check_size(h, std::size_t{1} << h.n_qubits());
  Method method = options.method;
  if (method == Method::kAuto) method = h.n_qubits() <= options.dense_max_qubits ? Method::kDense : Method::kLanczos;
  if (method == Method::kDense) return solve_dense(h, options);
  return solve_lanczos(h, options);
}

}  // namespace vqechem::exactdiag
