// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "vqechem/chem/fcidump.hpp"
#include "vqechem/error.hpp"
#include "vqechem/workflow/pipeline.hpp"

using namespace vqechem;
using namespace vqechem::chem;

namespace {

double max_difference(const MolecularIntegrals& a, const MolecularIntegrals& b) {
  REQUIRE(a.n_spatial_orbitals == b.n_spatial_orbitals);
  double d = std::abs(a.constant_energy - b.constant_energy);
  d = std::max(d, (a.h - b.h).cwiseAbs().maxCoeff());
  const std::size_t n = a.n_spatial_orbitals;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) d = std::max(d, std::abs(a.g(p, q, r, s) - b.g(p, q, r, s)));
  return d;
}

}  // namespace

TEST_CASE("minimal FCIDUMP") {
  const auto m = parse_fcidump("&FCI NORB=1,NELEC=2,MS2=0,\n&END\n0.5 1 1 1 1\n-1.0 1 1 0 0\n0.7 0 0 0 0\n");
  CHECK(m.n_spatial_orbitals == 1);
  CHECK(m.n_electrons == 2);
  CHECK(m.g(0, 0, 0, 0) == 0.5);
  CHECK(m.h(0, 0) == -1.0);
  CHECK(m.constant_energy == 0.7);
  const auto slash = parse_fcidump("&FCI NORB=1,NELEC=2,MS2=0\n/\n0.5 1 1 1 1\n-1.0 1 1 0 0\n0.7 0 0 0 0\n");
  CHECK(max_difference(m, slash) == 0.0);
}

TEST_CASE("Fortran exponents and multi-line headers") {
  const auto m = parse_fcidump(
      " &FCI NORB=2,\n  NELEC=2,MS2=0,\n  ORBSYM=1,1,\n  ISYM=1,\n &END\n 1.0D-01 1 1 1 1\n 2.5d-1 2 1 0 0\n"
      " -1.0E0 1 1 0 0\n 0.0 1 1 0 0\n");
  CHECK(m.n_spatial_orbitals == 2);
  CHECK(m.g(0, 0, 0, 0) == doctest::Approx(0.1));
  CHECK(m.h(1, 0) == doctest::Approx(0.25));
  CHECK(m.h(0, 1) == doctest::Approx(0.25));
}

TEST_CASE("FCIDUMP errors") {
  CHECK_THROWS_AS(parse_fcidump(""), ParseError);
  CHECK_THROWS_AS(parse_fcidump("NORB=1\n"), ParseError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=1,NELEC=2\n0.5 1 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NELEC=2\n&END\n"), ParseError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=1,NELEC=2\n&END\n0.5 2 1 1 1\n"), IndexError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=1,NELEC=2\n&END\n0.5 1 0 1 1\n"), IndexError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=1,NELEC=2\n&END\n(0.5,0.1) 1 1 1 1\n"), FormatError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=1,NELEC=2\n&END\nabc 1 1 1 1\n"), FormatError);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=1,NELEC=2,UHF=.TRUE.\n&END\n"), FormatError);
  try {
    parse_fcidump("&FCI NORB=x,NELEC=2\n&END\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 1);
  }
}

TEST_CASE("roundtrip of generated H2 integrals") {
  const auto h2 = workflow::integrals_from_molecule(hydrogen_chain({1.39}, units::LengthUnit::kBohr));
  const auto text = write_fcidump(h2);
  const auto back = parse_fcidump(text);
  CHECK(back.n_electrons == 2);
  CHECK(max_difference(h2, back) < 1e-12);
  CHECK(write_fcidump(back) == text);
}

TEST_CASE("H2S fixtures parse, validate and roundtrip") {
  for (const char* name : testing::kH2sFixtures) {
    CAPTURE(name);
    const auto m = read_fcidump_file(testing::fixture(name));
    CHECK(m.n_spatial_orbitals == 6);
    CHECK(m.n_electrons == 8);
    m.validate(1e-10);
    const auto back = parse_fcidump(write_fcidump(m));
    CHECK(max_difference(m, back) < 1e-12);
  }
}

TEST_CASE("FCIDUMP energies of the H2S fixtures match the reference CASCI") {
  const auto ref = testing::load_json("h2s_reference.json");
  for (const char* name : testing::kH2sFixtures) {
    CAPTURE(name);
    const auto m = read_fcidump_file(testing::fixture(name));
    const double e = oracle::det_ci_eigenvalues(m, 8)(0);
    CHECK(std::abs(e - ref[name]["e_casci_6o8e"].get<double>()) < 1e-8);
  }
}

TEST_CASE("random integrals roundtrip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = oracle::random_integrals(3 + trial % 2, 2, rng);
    CHECK(max_difference(m, parse_fcidump(write_fcidump(m))) < 1e-12);
  }
}
