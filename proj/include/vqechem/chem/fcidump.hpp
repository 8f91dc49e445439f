// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vqechem/chem/molecular_integrals.hpp"

namespace vqechem::chem {

/// Parses FCIDUMP text. Header: `&FCI NORB=..,NELEC=..,MS2=..,` with optional
/// ORBSYM/ISYM/UHF keys, terminated by `&END` or `/`. Body lines
/// `value i j k l` use 1-based indices; `i j 0 0` is a one-body term and
/// `0 0 0 0` the constant. Only real values are accepted.
MolecularIntegrals parse_fcidump(std::string_view text);

/// Writes the unique (8-fold reduced) nonzero integrals with round-trip
/// precision.
std::string write_fcidump(const MolecularIntegrals& integrals);

MolecularIntegrals read_fcidump_file(const std::filesystem::path& path);
void write_fcidump_file(const std::filesystem::path& path, const MolecularIntegrals& integrals);

}  // namespace vqechem::chem
