// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vqechem/error.hpp"
#include "vqechem/qubit/pauli.hpp"
#include "vqechem/qubit/qubit_hamiltonian.hpp"

using namespace vqechem;
using namespace vqechem::qubit;

namespace {

PauliString P(const char* s) { return PauliString::from_letters(s); }

PauliString random_string(std::size_t n, std::mt19937_64& rng) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return PauliString(n, rng() & mask, rng() & mask);
}

}  // namespace

TEST_CASE("letters and masks") {
  const auto p = P("XYZI");
  CHECK(p.n_qubits == 4);
  CHECK(p.x == 0b0011);
  CHECK(p.z == 0b0110);
  CHECK(p.str() == "XYZI");
  CHECK(p.letter(1) == 'Y');
  CHECK(p.weight() == 3);
  CHECK(P("IIII").is_identity());
  CHECK(PauliString::single(3, 2, 'Z').str() == "IIZ");
  CHECK_THROWS_AS(P("XQ"), FormatError);
  CHECK_THROWS_AS(PauliString(2, 0b100, 0), ShapeError);
}

TEST_CASE("single-qubit products") {
  auto [ph, prod] = pauli_multiply(P("X"), P("X"));
  CHECK(ph == Phase::kPlusOne);
  CHECK(prod.is_identity());
  std::tie(ph, prod) = pauli_multiply(P("X"), P("Y"));
  CHECK(ph == Phase::kPlusI);
  CHECK(prod == P("Z"));
  std::tie(ph, prod) = pauli_multiply(P("Y"), P("X"));
  CHECK(ph == Phase::kMinusI);
  std::tie(ph, prod) = pauli_multiply(P("Z"), P("X"));
  CHECK(ph == Phase::kPlusI);
  CHECK(prod == P("Y"));
  CHECK_THROWS_AS(pauli_multiply(P("X"), P("XX")), ShapeError);
}

TEST_CASE("products match dense matrices on 6 qubits") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_string(6, rng), b = random_string(6, rng);
    const auto [ph, prod] = pauli_multiply(a, b);
    const oracle::MatrixXcd expected = oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
    const oracle::MatrixXcd got = to_complex(ph) * oracle::pauli_matrix(prod);
    CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("associativity and identity") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_string(7, rng), b = random_string(7, rng), c = random_string(7, rng);
    const auto [p1, ab] = pauli_multiply(a, b);
    const auto [p2, ab_c] = pauli_multiply(ab, c);
    const auto [p3, bc] = pauli_multiply(b, c);
    const auto [p4, a_bc] = pauli_multiply(a, bc);
    CHECK(ab_c == a_bc);
    CHECK(to_complex(p1) * to_complex(p2) == to_complex(p3) * to_complex(p4));
    const auto [pi, ai] = pauli_multiply(a, PauliString::identity(7));
    CHECK(pi == Phase::kPlusOne);
    CHECK(ai == a);
  }
}

TEST_CASE("qubit-wise commutation") {
  CHECK(commutes_qubitwise(P("ZI"), P("ZZ")));
  CHECK_FALSE(commutes_qubitwise(P("XX"), P("ZZ")));
  CHECK(commutes(P("XX"), P("ZZ")));
  CHECK_THROWS_AS(commutes_qubitwise(P("X"), P("XX")), ShapeError);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_string(5, rng), b = random_string(5, rng);
    const auto ma = oracle::pauli_matrix(a), mb = oracle::pauli_matrix(b);
    const double comm = (ma * mb - mb * ma).cwiseAbs().maxCoeff();
    CHECK(commutes(a, b) == (comm < 1e-12));
    if (commutes_qubitwise(a, b)) CHECK(comm < 1e-12);
  }
}

TEST_CASE("basis phase agrees with the matrix element") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_string(4, rng);
    const auto m = oracle::pauli_matrix(p);
    for (std::uint64_t b = 0; b < 16; ++b) {
      CHECK(std::abs(m(static_cast<Eigen::Index>(b ^ p.x), static_cast<Eigen::Index>(b)) - basis_phase(p, b)) < 1e-15);
    }
  }
}

TEST_CASE("Hamiltonian assembly merges, prunes and serialises") {
  auto h = QubitHamiltonian::from_terms(
      2, {{0.5, P("ZI")}, {0.25, P("ZI")}, {1e-13, P("XX")}, {-0.3, P("II")}, {0.1, P("IZ")}, {-0.1, P("IZ")}});
  REQUIRE(h.size() == 2);
  CHECK(h.terms()[0].string.is_identity());
  CHECK(h.identity_coefficient() == doctest::Approx(-0.3));
  CHECK(h.terms()[1].coefficient == doctest::Approx(0.75));
  const auto text = h.to_text();
  const auto back = QubitHamiltonian::parse_text(text);
  REQUIRE(back.size() == h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    CHECK(back.terms()[i].coefficient == h.terms()[i].coefficient);
    CHECK(back.terms()[i].string == h.terms()[i].string);
  }
  CHECK_THROWS(QubitHamiltonian::parse_text("0.1 XX\n0.2 XXX\n"));
}
