// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// All unit conversions used anywhere in the project. Energies are Hartree
// internally; geometry enters in Bohr or Angstrom with an explicit declaration.
namespace vqechem::units {

inline constexpr double kHartreeToKcalPerMol = 627.509474;
inline constexpr double kAngstromToBohr = 1.8897259886;
inline constexpr double kBohrToAngstrom = 1.0 / kAngstromToBohr;
inline constexpr double kHartreeToMilliHartree = 1000.0;

enum class LengthUnit { kBohr, kAngstrom };

inline constexpr double to_bohr(double value, LengthUnit unit) {
  return unit == LengthUnit::kBohr ? value : value * kAngstromToBohr;
}

}  // namespace vqechem::units
