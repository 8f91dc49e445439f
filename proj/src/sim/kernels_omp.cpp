// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "vqechem/sim/kernels.hpp"

namespace vqechem::sim::kernels::omp {

using qubit::basis_phase;

namespace {

using Index = std::int64_t;

// Index with a zero inserted at bit position q.
inline std::size_t insert_zero(std::size_t k, std::size_t q) {
  const std::size_t low = k & ((std::size_t{1} << q) - 1);
  return ((k >> q) << (q + 1)) | low;
}

inline bool parallel(std::size_t dim) { return dim >= kParallelMinDim; }

// Sums f over fixed blocks of [0, dim) and reduces block partials in order.
template <typename T, typename F>
T blocked_sum(std::size_t dim, F&& f) {
  const std::size_t n_blocks = (dim + kReductionBlock - 1) / kReductionBlock;
  std::vector<T> partial(n_blocks, T{});
#pragma omp parallel for schedule(static) if (parallel(dim))
  for (Index blk = 0; blk < static_cast<Index>(n_blocks); ++blk) {
    const std::size_t begin = static_cast<std::size_t>(blk) * kReductionBlock;
    const std::size_t end = std::min(dim, begin + kReductionBlock);
    T acc{};
    for (std::size_t i = begin; i < end; ++i) acc += f(i);
    partial[static_cast<std::size_t>(blk)] = acc;
  }
  T total{};
  for (const T& v : partial) total += v;
  return total;
}

template <typename F>
void for_each_pair(std::size_t dim, std::size_t q, F&& f) {
  const Index half = static_cast<Index>(dim / 2);
#pragma omp parallel for schedule(static) if (parallel(dim))
  for (Index k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), q);
    f(i0, i0 | (std::size_t{1} << q));
  }
}

}  // namespace

void apply_x(StateSpan psi, std::size_t q) {
  for_each_pair(psi.size(), q, [&](std::size_t i0, std::size_t i1) { std::swap(psi[i0], psi[i1]); });
}

void apply_h(StateSpan psi, std::size_t q) {
  const double r = 1.0 / std::sqrt(2.0);
  for_each_pair(psi.size(), q, [&](std::size_t i0, std::size_t i1) {
    const Amplitude a = psi[i0], b = psi[i1];
    psi[i0] = r * (a + b);
    psi[i1] = r * (a - b);
  });
}

void apply_sdg(StateSpan psi, std::size_t q) {
  for_each_pair(psi.size(), q, [&](std::size_t, std::size_t i1) { psi[i1] *= Amplitude(0.0, -1.0); });
}

void apply_ry(StateSpan psi, std::size_t q, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  for_each_pair(psi.size(), q, [&](std::size_t i0, std::size_t i1) {
    const Amplitude a = psi[i0], b = psi[i1];
    psi[i0] = c * a - s * b;
    psi[i1] = s * a + c * b;
  });
}

void apply_rz(StateSpan psi, std::size_t q, double theta) {
  const Amplitude lo = std::polar(1.0, -theta / 2), hi = std::polar(1.0, theta / 2);
  for_each_pair(psi.size(), q, [&](std::size_t i0, std::size_t i1) {
    psi[i0] *= lo;
    psi[i1] *= hi;
  });
}

void apply_cnot(StateSpan psi, std::size_t control, std::size_t target) {
  const std::size_t cb = std::size_t{1} << control;
  for_each_pair(psi.size(), target, [&](std::size_t i0, std::size_t i1) {
    if (i0 & cb) std::swap(psi[i0], psi[i1]);
  });
}

void apply_cz(StateSpan psi, std::size_t a, std::size_t b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  const Index dim = static_cast<Index>(psi.size());
#pragma omp parallel for schedule(static) if (parallel(psi.size()))
  for (Index i = 0; i < dim; ++i) {
    if ((static_cast<std::size_t>(i) & mask) == mask) psi[i] = -psi[i];
  }
}

void apply_pauli_rotation(StateSpan psi, const qubit::PauliString& p, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const Amplitude mis(0.0, -s);
  const Index dim = static_cast<Index>(psi.size());
  if (p.x == 0) {
#pragma omp parallel for schedule(static) if (parallel(psi.size()))
    for (Index b = 0; b < dim; ++b) psi[b] *= c + mis * basis_phase(p, static_cast<std::uint64_t>(b));
    return;
  }
  const std::size_t q = static_cast<std::size_t>(std::countr_zero(std::bit_floor(p.x)));
  for_each_pair(psi.size(), q, [&](std::size_t b, std::size_t) {
    const std::size_t f = b ^ p.x;
    const Amplitude a0 = psi[b], a1 = psi[f];
    psi[b] = c * a0 + mis * basis_phase(p, f) * a1;
    psi[f] = c * a1 + mis * basis_phase(p, b) * a0;
  });
}

Amplitude pauli_expectation(ConstStateSpan psi, const qubit::PauliString& p) {
  return blocked_sum<Amplitude>(psi.size(),
                                [&](std::size_t b) { return std::conj(psi[b ^ p.x]) * basis_phase(p, b) * psi[b]; });
}

double expectation(ConstStateSpan psi, const qubit::QubitHamiltonian& h) {
  const auto& terms = h.terms();
  return blocked_sum<double>(psi.size(), [&](std::size_t c) {
    // <psi|H|psi> = sum_c conj(psi_c) (H psi)_c
    Amplitude hc = 0.0;
    for (const auto& t : terms) {
      const std::size_t b = c ^ t.string.x;
      hc += t.coefficient * basis_phase(t.string, b) * psi[b];
    }
    return (std::conj(psi[c]) * hc).real();
  });
}

void apply_hamiltonian(const qubit::QubitHamiltonian& h, ConstStateSpan in, StateSpan out) {
  const auto& terms = h.terms();
  const Index dim = static_cast<Index>(in.size());
#pragma omp parallel for schedule(static) if (parallel(in.size()))
  for (Index ci = 0; ci < dim; ++ci) {
    const std::size_t c = static_cast<std::size_t>(ci);
    Amplitude acc = 0.0;
    for (const auto& t : terms) {
      const std::size_t b = c ^ t.string.x;
      acc += t.coefficient * basis_phase(t.string, b) * in[b];
    }
    out[c] = acc;
  }
}

double norm_squared(ConstStateSpan psi) {
  return blocked_sum<double>(psi.size(), [&](std::size_t i) { return std::norm(psi[i]); });
}

}  // namespace vqechem::sim::kernels::omp
