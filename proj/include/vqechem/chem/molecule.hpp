// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vqechem/units.hpp"

namespace vqechem::chem {

using Vec3 = std::array<double, 3>;

struct Atom {
  std::string symbol;
  int nuclear_charge = 1;
  Vec3 position_bohr{};
};

/// Nuclear framework plus electron count. Positions are always Bohr.
class Molecule {
 public:
  Molecule() = default;
  /// Validates Z >= 1, finite positions and a non-negative electron count.
  Molecule(std::vector<Atom> atoms, int n_electrons);

  /// Neutral-minus-charge electron count from the nuclear charges.
  static Molecule from_atoms(std::vector<Atom> atoms, int charge = 0);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  int n_electrons() const noexcept { return n_electrons_; }
  int total_nuclear_charge() const noexcept;

  /// Sum over atom pairs of Z_A Z_B / |R_A - R_B|.
  double nuclear_repulsion() const;

 private:
  std::vector<Atom> atoms_;
  int n_electrons_ = 0;
};

/// Nuclear charge for an element symbol (H through Ar); throws
/// UnsupportedElementError for anything else.
int nuclear_charge_of(std::string_view symbol);

/// Collinear hydrogen chain along z with the given nearest-neighbour spacings.
Molecule hydrogen_chain(const std::vector<double>& spacings, units::LengthUnit unit, int charge = 0);

/// Parses the geometry JSON document:
///   {"atoms": [{"symbol": "H", "xyz_bohr": [0, 0, 0]}, ...], "charge": 0}
/// `xyz_angstrom` is accepted in place of `xyz_bohr`.
Molecule parse_geometry_json(std::string_view text);

}  // namespace vqechem::chem
