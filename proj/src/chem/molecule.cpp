// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/chem/molecule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"

#include "vqechem/error.hpp"

namespace vqechem::chem {

namespace {

constexpr std::array<std::string_view, 18> kElements = {
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F",
    "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar"};

double distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

}  // namespace

Molecule::Molecule(std::vector<Atom> atoms, int n_electrons)
    : atoms_(std::move(atoms)), n_electrons_(n_electrons) {
  if (n_electrons_ < 0) throw Error("molecule: negative electron count");
  for (const auto& atom : atoms_) {
    if (atom.nuclear_charge < 1) throw Error("molecule: nuclear charge must be >= 1 for " + atom.symbol);
    for (double c : atom.position_bohr) {
      if (!std::isfinite(c)) throw Error("molecule: non-finite coordinate for " + atom.symbol);
    }
  }
}

Molecule Molecule::from_atoms(std::vector<Atom> atoms, int charge) {
  int z = 0;
  for (const auto& a : atoms) z += a.nuclear_charge;
  return Molecule(std::move(atoms), z - charge);
}

int Molecule::total_nuclear_charge() const noexcept {
  int z = 0;
  for (const auto& a : atoms_) z += a.nuclear_charge;
  return z;
}

double Molecule::nuclear_repulsion() const {
  double e = 0.0;
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const double r = distance(atoms_[a].position_bohr, atoms_[b].position_bohr);
      if (r < 1e-8) throw SingularGeometryError("coincident nuclei " + std::to_string(b) + " and " + std::to_string(a));
      e += atoms_[a].nuclear_charge * atoms_[b].nuclear_charge / r;
    }
  }
  return e;
}

int nuclear_charge_of(std::string_view symbol) {
  auto it = std::find(kElements.begin(), kElements.end(), symbol);
  if (it == kElements.end()) throw UnsupportedElementError("unknown element symbol '" + std::string(symbol) + "'");
  return static_cast<int>(it - kElements.begin()) + 1;
}

Molecule hydrogen_chain(const std::vector<double>& spacings, units::LengthUnit unit, int charge) {
  std::vector<Atom> atoms;
  double z = 0.0;
  atoms.push_back({"H", 1, {0.0, 0.0, 0.0}});
  for (double s : spacings) {
    z += units::to_bohr(s, unit);
    atoms.push_back({"H", 1, {0.0, 0.0, z}});
  }
  return Molecule::from_atoms(std::move(atoms), charge);
}

Molecule parse_geometry_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("geometry: ") + e.what(), 0);
  }
  if (!doc.contains("atoms") || !doc["atoms"].is_array() || doc["atoms"].empty()) {
    throw ParseError("geometry: 'atoms' must be a non-empty array", 0);
  }
  std::vector<Atom> atoms;
  int charge = 0;
  try {
    for (const auto& entry : doc["atoms"]) {
      Atom atom;
      atom.symbol = entry.at("symbol").get<std::string>();
      atom.nuclear_charge = nuclear_charge_of(atom.symbol);
      units::LengthUnit unit = units::LengthUnit::kBohr;
      const nlohmann::json* xyz = nullptr;
      if (entry.contains("xyz_bohr")) {
        xyz = &entry["xyz_bohr"];
      } else if (entry.contains("xyz_angstrom")) {
        xyz = &entry["xyz_angstrom"];
        unit = units::LengthUnit::kAngstrom;
      } else {
        throw ParseError("geometry: atom '" + atom.symbol + "' needs xyz_bohr or xyz_angstrom", 0);
      }
      if (!xyz->is_array() || xyz->size() != 3) throw ParseError("geometry: coordinates must have 3 entries", 0);
      for (int k = 0; k < 3; ++k) atom.position_bohr[k] = units::to_bohr((*xyz)[k].get<double>(), unit);
      atoms.push_back(std::move(atom));
    }
    charge = doc.value("charge", 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("geometry: ") + e.what(), 0);
  }
  return Molecule::from_atoms(std::move(atoms), charge);
}

}  // namespace vqechem::chem
