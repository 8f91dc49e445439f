// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vqechem::workflow {

/// One sample of an energy curve. Coordinates keep whatever unit the caller
/// declared; energies are Hartree.
struct CurvePoint {
  std::string label;
  double coordinate = 0.0;
  double energy = 0.0;
};

struct StationaryPoint {
  double coordinate = 0.0;
  double energy = 0.0;
};

/// Cubic least-squares fit over the (up to) 6 consecutive samples around the
/// discrete minimum; returns the stationary point with positive curvature.
/// FitError for fewer than 4 points, NoBracketError when the discrete minimum
/// is an endpoint or the fitted minimum leaves the fit window.
StationaryPoint fit_equilibrium(const std::vector<CurvePoint>& points);

/// (E at the largest coordinate - fitted minimum) in kcal/mol. A curve whose
/// energy spread is below 1e-12 Ha gives 0.
double dissociation_energy(const std::vector<CurvePoint>& points);

struct Barrier {
  StationaryPoint reactant;
  StationaryPoint saddle;
  double kcal_per_mol = 0.0;
};

/// Fitted saddle near the interior global maximum minus the fitted reactant
/// minimum (lowest sample left of the maximum). NoBarrierError unless the
/// maximum is interior with an interior minimum on each side.
Barrier activation_energy(const std::vector<CurvePoint>& points);

struct ShiftRow {
  std::string label;
  double energy_a = 0.0;
  double energy_b = 0.0;
  double delta = 0.0;  // energy_a - energy_b
};

struct ShiftReport {
  std::vector<ShiftRow> rows;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Pointwise a - b, rows in the order of `a`. AlignmentError unless both
/// curves carry the same set of unique labels.
ShiftReport compare_curves(const std::vector<CurvePoint>& a, const std::vector<CurvePoint>& b);

/// `geometry_label,energy_a,energy_b,delta_ha`.
std::string shift_csv(const ShiftReport& report);

/// Reads `geometry_label`, `coordinate` and one energy column from a CSV with
/// a header line. An empty column name picks `energy`, else `e_vqe`. Rows
/// whose energy field is empty are skipped.
std::vector<CurvePoint> parse_curve_csv(std::string_view text, const std::string& column = "");

std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace vqechem::workflow
