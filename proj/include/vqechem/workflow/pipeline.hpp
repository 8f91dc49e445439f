// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqechem/chem/molecular_integrals.hpp"
#include "vqechem/chem/molecule.hpp"
#include "vqechem/vqe/vqe.hpp"
#include "vqechem/workflow/analysis.hpp"

namespace vqechem::workflow {

enum class AnsatzKind { kHardwareEfficient, kUccsd };

std::string to_string(AnsatzKind kind);
/// Accepts "hardware" or "uccsd".
AnsatzKind parse_ansatz_kind(const std::string& name);

/// Either an inline hydrogen-only geometry or an FCIDUMP path.
struct PointSource {
  std::string label;
  double coordinate = 0.0;
  std::optional<chem::Molecule> geometry;
  std::filesystem::path fcidump;
};

struct RunSettings {
  std::vector<std::size_t> frozen;
  AnsatzKind ansatz = AnsatzKind::kUccsd;
  std::size_t reps = 1;
  vqe::OptimizerConfig optimizer;
  vqe::EstimatorConfig estimator;
  std::size_t restarts = 5;
};

struct ScanManifest {
  std::string label;
  std::string coordinate_unit = "angstrom";
  std::vector<PointSource> points;
  RunSettings settings;
  std::uint64_t base_seed = 1;
};

/// JSON manifest. Relative FCIDUMP paths resolve against `base_dir`.
///   {"label", "coordinate_unit", "base_seed", "points": [{"label",
///    "coordinate", "geometry" | "fcidump"}], "generator": {"type":
///    "h2_stretch" | "h3_exchange", ...}, "active_space": {"frozen": []},
///    "ansatz", "reps", "restarts", "mode", "shots", "optimizer": {...}}
ScanManifest parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir = {});
ScanManifest read_manifest_file(const std::filesystem::path& path);

/// H2 at each bond length (Angstrom), labels `r=<len>`.
std::vector<PointSource> h2_stretch_points(const std::vector<double>& lengths_angstrom);

struct H3PathSpec {
  std::size_t count = 21;
  double r_saddle = 0.93;    // Angstrom, symmetric configuration
  double r_compressed = 0.60;  // bonded distance at the path ends
  double r_far = 3.0;         // spectator distance at the path ends
};

/// Collinear H-H-H path for coordinate s in [-1, 1]: with t = |s| the bonded
/// pair sits at r_saddle + (r_compressed - r_saddle) t and the spectator at
/// r_saddle + (r_far - r_saddle) t; the bonded pair is on the right for s < 0.
std::vector<PointSource> h3_exchange_points(const H3PathSpec& spec);

/// RHF orbitals, then MO integrals. Odd electron counts take orbitals from
/// the closed-shell cation while keeping the true electron count.
chem::MolecularIntegrals integrals_from_molecule(const chem::Molecule& molecule);

chem::MolecularIntegrals load_integrals(const PointSource& source);

struct PesPoint {
  std::string label;
  double coordinate = 0.0;
  bool ok = false;
  std::string message;
  double e_vqe = 0.0;
  double e_fci = 0.0;
  double e_hf = 0.0;
  double error_mha = 0.0;
  std::size_t n_qubits = 0;
  std::size_t n_pauli_terms = 0;
  std::size_t n_groups = 0;
  std::size_t n_parameters = 0;
  vqe::VqeResult vqe;
};

/// Integrals, optional frozen core, JW, VQE with restarts and exact
/// diagonalisation. Optimizer and estimator seeds are replaced by `seed`.
PesPoint run_point(const PointSource& source, const RunSettings& settings, std::uint64_t seed);

struct ScanResult {
  std::string label;
  std::vector<PesPoint> points;
  std::size_t n_failed = 0;
};

/// Point i runs with seed base_seed + i; points may run concurrently and are
/// returned in manifest order. A failing point is recorded and the scan goes
/// on; ScanError when every point fails.
ScanResult cmd_scan(const ScanManifest& manifest);

/// `geometry_label,coordinate,e_vqe,e_fci,error_mha,n_pauli_terms,n_groups,status`.
std::string pes_csv(const ScanResult& scan);

/// Machine-readable summary (pretty-printed JSON, trailing newline).
std::string scan_json(const ScanResult& scan);

/// Successful points as curve samples of e_vqe (or e_fci).
std::vector<CurvePoint> curve_from_scan(const ScanResult& scan, bool use_fci = false);

}  // namespace vqechem::workflow
