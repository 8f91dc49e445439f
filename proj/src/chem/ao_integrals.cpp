// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/chem/ao_integrals.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

#include "vqechem/basis_data.hpp"
#include "vqechem/error.hpp"

namespace vqechem::chem {

namespace {

constexpr double kPi = std::numbers::pi;

double dist2(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

Vec3 gaussian_center(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return {(a * A[0] + b * B[0]) / p, (a * A[1] + b * B[1]) / p, (a * A[2] + b * B[2]) / p};
}

double primitive_norm(double a) { return std::pow(2.0 * a / kPi, 0.75); }

// Unnormalized primitive integrals over s Gaussians.
double prim_overlap(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return std::pow(kPi / p, 1.5) * std::exp(-a * b / p * dist2(A, B));
}

double prim_kinetic(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  const double mu = a * b / p;
  const double r2 = dist2(A, B);
  return mu * (3.0 - 2.0 * mu * r2) * std::pow(kPi / p, 1.5) * std::exp(-mu * r2);
}

double prim_nuclear(double a, const Vec3& A, double b, const Vec3& B, const Vec3& C, double z) {
  const double p = a + b;
  const Vec3 P = gaussian_center(a, A, b, B);
  return -2.0 * kPi / p * z * std::exp(-a * b / p * dist2(A, B)) * boys_f0(p * dist2(P, C));
}

double prim_eri(double a, const Vec3& A, double b, const Vec3& B, double c, const Vec3& C, double d,
                const Vec3& D) {
  const double p = a + b;
  const double q = c + d;
  const Vec3 P = gaussian_center(a, A, b, B);
  const Vec3 Q = gaussian_center(c, C, d, D);
  const double pre = 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q));
  return pre * std::exp(-a * b / p * dist2(A, B) - c * d / q * dist2(C, D)) *
         boys_f0(p * q / (p + q) * dist2(P, Q));
}

template <typename F>
double contract2(const ContractedGaussian& f, const ContractedGaussian& g, F&& prim) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.exponents.size(); ++i)
    for (std::size_t j = 0; j < g.exponents.size(); ++j)
      sum += f.coefficients[i] * g.coefficients[j] * prim(f.exponents[i], f.center, g.exponents[j], g.center);
  return sum;
}

BasisSetData load_sto3g() {
  const auto doc = nlohmann::json::parse(detail::kSto3gHydrogenJson);
  BasisSetData data;
  data.name = doc.at("basis").get<std::string>();
  data.version = doc.at("version").get<int>();
  data.exponents = doc.at("exponents").get<std::vector<double>>();
  data.coefficients = doc.at("coefficients").get<std::vector<double>>();
  if (data.exponents.size() != data.coefficients.size() || data.exponents.empty()) {
    throw FormatError("basis data: exponent/coefficient length mismatch");
  }
  return data;
}

}  // namespace

const BasisSetData& sto3g_hydrogen() {
  static const BasisSetData data = load_sto3g();
  return data;
}

double boys_f0(double t) {
  if (t <= 1e-12) return 1.0 - t / 3.0;
  const double st = std::sqrt(t);
  return 0.5 * std::sqrt(kPi) / st * std::erf(st);
}

std::vector<ContractedGaussian> build_sto3g_basis(const Molecule& molecule) {
  const auto& data = sto3g_hydrogen();
  std::vector<ContractedGaussian> basis;
  for (const auto& atom : molecule.atoms()) {
    if (atom.nuclear_charge != 1) {
      throw UnsupportedElementError("STO-3G integrals are only generated for hydrogen, got " + atom.symbol);
    }
    ContractedGaussian g;
    g.center = atom.position_bohr;
    g.exponents = data.exponents;
    for (std::size_t k = 0; k < data.exponents.size(); ++k) {
      g.coefficients.push_back(data.coefficients[k] * primitive_norm(data.exponents[k]));
    }
    const double self = contract2(g, g, prim_overlap);
    for (double& c : g.coefficients) c /= std::sqrt(self);
    basis.push_back(std::move(g));
  }
  return basis;
}

AOIntegrals compute_ao_integrals(const Molecule& molecule) {
  const auto basis = build_sto3g_basis(molecule);
  const double e_nuc = molecule.nuclear_repulsion();  // throws on coincident atoms
  const std::size_t n = basis.size();

  AOIntegrals ao;
  ao.n_ao = n;
  ao.e_nuc = e_nuc;
  ao.overlap = Eigen::MatrixXd::Zero(n, n);
  ao.kinetic = Eigen::MatrixXd::Zero(n, n);
  ao.nuclear = Eigen::MatrixXd::Zero(n, n);
  ao.eri = Tensor4(n);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double s = contract2(basis[i], basis[j], prim_overlap);
      const double t = contract2(basis[i], basis[j], prim_kinetic);
      double v = 0.0;
      for (const auto& atom : molecule.atoms()) {
        v += contract2(basis[i], basis[j], [&](double a, const Vec3& A, double b, const Vec3& B) {
          return prim_nuclear(a, A, b, B, atom.position_bohr, atom.nuclear_charge);
        });
      }
      ao.overlap(i, j) = ao.overlap(j, i) = s;
      ao.kinetic(i, j) = ao.kinetic(j, i) = t;
      ao.nuclear(i, j) = ao.nuclear(j, i) = v;
    }
  }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const auto& A = basis[p];
          const auto& B = basis[q];
          const auto& C = basis[r];
          const auto& D = basis[s];
          double sum = 0.0;
          for (std::size_t i = 0; i < A.exponents.size(); ++i)
            for (std::size_t j = 0; j < B.exponents.size(); ++j)
              for (std::size_t k = 0; k < C.exponents.size(); ++k)
                for (std::size_t l = 0; l < D.exponents.size(); ++l)
                  sum += A.coefficients[i] * B.coefficients[j] * C.coefficients[k] * D.coefficients[l] *
                         prim_eri(A.exponents[i], A.center, B.exponents[j], B.center, C.exponents[k], C.center,
                                  D.exponents[l], D.center);
          ao.eri.set_symmetric(p, q, r, s, sum);
        }
  return ao;
}

}  // namespace vqechem::chem
