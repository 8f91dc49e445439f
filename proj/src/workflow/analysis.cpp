// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/workflow/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "vqechem/error.hpp"
#include "vqechem/units.hpp"

namespace vqechem::workflow {

namespace {

constexpr std::size_t kFitWindow = 6;
constexpr std::size_t kMinFitPoints = 4;

std::vector<CurvePoint> sorted(std::vector<CurvePoint> points) {
  std::stable_sort(points.begin(), points.end(),
                   [](const CurvePoint& a, const CurvePoint& b) { return a.coordinate < b.coordinate; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].coordinate == points[i - 1].coordinate) {
      throw FitError(fmt::format("duplicate coordinate {}", points[i].coordinate));
    }
  }
  for (const auto& p : points) {
    if (!std::isfinite(p.coordinate) || !std::isfinite(p.energy)) throw FitError("non-finite curve sample");
  }
  return points;
}

// Cubic through the window around `centre`, stationary point of the requested
// curvature sign. `points` is sorted.
template <typename Fail>
StationaryPoint fit_stationary(const std::vector<CurvePoint>& points, std::size_t centre, bool minimum, Fail fail) {
  const std::size_t n = points.size();
  const std::size_t k = std::min(kFitWindow, n);
  std::size_t lo = centre >= (k - 1) / 2 ? centre - (k - 1) / 2 : 0;
  lo = std::min(lo, n - k);

  const double x0 = points[centre].coordinate;
  double span = 0.0;
  for (std::size_t i = lo; i < lo + k; ++i) span = std::max(span, std::abs(points[i].coordinate - x0));
  Eigen::MatrixXd a(static_cast<Eigen::Index>(k), 4);
  Eigen::VectorXd y(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const double u = (points[lo + i].coordinate - x0) / span;
    const auto r = static_cast<Eigen::Index>(i);
    a(r, 0) = 1.0;
    a(r, 1) = u;
    a(r, 2) = u * u;
    a(r, 3) = u * u * u;
    y(r) = points[lo + i].energy;
  }
  const Eigen::Vector4d c = a.colPivHouseholderQr().solve(y);

  // p'(u) = c1 + 2 c2 u + 3 c3 u^2, roots by the cancellation-free formula.
  const double qa = 3.0 * c(3), qb = 2.0 * c(2), qc = c(1);
  std::vector<double> roots;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc >= 0.0) {
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    if (q != 0.0) roots.push_back(qc / q);
    if (qa != 0.0) roots.push_back(q / qa);
  }
  const double u_lo = (points[lo].coordinate - x0) / span;
  const double u_hi = (points[lo + k - 1].coordinate - x0) / span;
  double best_u = std::numeric_limits<double>::quiet_NaN();
  for (double u : roots) {
    const double curvature = 2.0 * c(2) + 6.0 * c(3) * u;
    if ((minimum ? curvature > 0.0 : curvature < 0.0) && u >= u_lo && u <= u_hi) {
      if (std::isnan(best_u) || std::abs(u) < std::abs(best_u)) best_u = u;
    }
  }
  if (std::isnan(best_u)) fail("no stationary point of the right curvature inside the fit window");
  const double u = best_u;
  return {x0 + span * u, c(0) + u * (c(1) + u * (c(2) + u * c(3)))};
}

std::size_t arg_extreme(const std::vector<CurvePoint>& p, std::size_t begin, std::size_t end, bool minimum) {
  std::size_t best = begin;
  for (std::size_t i = begin + 1; i < end; ++i) {
    if (minimum ? p[i].energy < p[best].energy : p[i].energy > p[best].energy) best = i;
  }
  return best;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError(fmt::format("bad number '{}'", s));
  return v;
}

}  // namespace

StationaryPoint fit_equilibrium(const std::vector<CurvePoint>& input) {
  if (input.size() < kMinFitPoints) {
    throw FitError(fmt::format("fit needs at least {} points, got {}", kMinFitPoints, input.size()));
  }
  const auto points = sorted(input);
  const std::size_t i = arg_extreme(points, 0, points.size(), true);
  if (i == 0 || i + 1 == points.size()) throw NoBracketError("discrete minimum lies at the end of the scan");
  return fit_stationary(points, i, true, [](const std::string& m) { throw NoBracketError(m); });
}

double dissociation_energy(const std::vector<CurvePoint>& input) {
  if (input.empty()) throw FitError("empty curve");
  const auto [lo, hi] = std::minmax_element(input.begin(), input.end(), [](const auto& a, const auto& b) {
    return a.energy < b.energy;
  });
  if (hi->energy - lo->energy <= 1e-12) return 0.0;
  const auto eq = fit_equilibrium(input);
  const auto points = sorted(input);
  return (points.back().energy - eq.energy) * units::kHartreeToKcalPerMol;
}

Barrier activation_energy(const std::vector<CurvePoint>& input) {
  if (input.size() < 2 * kMinFitPoints - 1) {
    throw FitError(fmt::format("barrier fit needs at least {} points, got {}", 2 * kMinFitPoints - 1, input.size()));
  }
  const auto points = sorted(input);
  const std::size_t n = points.size();
  // Highest interior local maximum with an interior minimum on each side.
  std::size_t top = n, left = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(points[i].energy > points[i - 1].energy && points[i].energy >= points[i + 1].energy)) continue;
    const std::size_t l = arg_extreme(points, 0, i, true);
    const std::size_t r = arg_extreme(points, i + 1, n, true);
    if (l == 0 || r + 1 == n) continue;
    if (top == n || points[i].energy > points[top].energy) top = i, left = l;
  }
  if (top == n) throw NoBarrierError("no interior maximum with an interior minimum on both sides");

  auto no_barrier = [](const std::string& m) { throw NoBarrierError(m); };
  Barrier b;
  b.saddle = fit_stationary(points, top, false, no_barrier);
  b.reactant = fit_stationary(points, left, true, no_barrier);
  b.kcal_per_mol = (b.saddle.energy - b.reactant.energy) * units::kHartreeToKcalPerMol;
  return b;
}

ShiftReport compare_curves(const std::vector<CurvePoint>& a, const std::vector<CurvePoint>& b) {
  if (a.empty()) throw AlignmentError("cannot compare empty curves");
  std::map<std::string, double> eb;
  for (const auto& p : b) {
    if (!eb.emplace(p.label, p.energy).second) throw AlignmentError(fmt::format("duplicate label '{}'", p.label));
  }
  std::set<std::string> seen;
  ShiftReport report;
  for (const auto& p : a) {
    if (!seen.insert(p.label).second) throw AlignmentError(fmt::format("duplicate label '{}'", p.label));
    const auto it = eb.find(p.label);
    if (it == eb.end()) throw AlignmentError(fmt::format("label '{}' missing from the second curve", p.label));
    report.rows.push_back({p.label, p.energy, it->second, p.energy - it->second});
  }
  if (seen.size() != eb.size()) throw AlignmentError("second curve has labels missing from the first");
  double sum = 0.0;
  report.min = report.max = report.rows.front().delta;
  for (const auto& r : report.rows) {
    sum += r.delta;
    report.min = std::min(report.min, r.delta);
    report.max = std::max(report.max, r.delta);
  }
  report.mean = sum / static_cast<double>(report.rows.size());
  return report;
}

std::string shift_csv(const ShiftReport& report) {
  std::string out = "geometry_label,energy_a,energy_b,delta_ha\n";
  for (const auto& r : report.rows) out += fmt::format("{},{:.10f},{:.10f},{:.10f}\n", r.label, r.energy_a, r.energy_b, r.delta);
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') fields.back().pop_back();
  return fields;
}

std::vector<CurvePoint> parse_curve_csv(std::string_view text, const std::string& column) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("curve CSV is empty", 1);
  const auto header = split_csv_line(lines[0]);
  auto find = [&](const std::string& name) -> std::ptrdiff_t {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : it - header.begin();
  };
  const std::ptrdiff_t label_col = find("geometry_label");
  const std::ptrdiff_t coord_col = find("coordinate");
  std::ptrdiff_t energy_col = -1;
  if (!column.empty()) {
    energy_col = find(column);
  } else {
    energy_col = find("energy");
    if (energy_col < 0) energy_col = find("e_vqe");
  }
  if (label_col < 0) throw ParseError("curve CSV lacks a geometry_label column", 1);
  if (energy_col < 0) {
    throw ParseError(fmt::format("curve CSV lacks the energy column '{}'", column.empty() ? "energy" : column), 1);
  }

  std::vector<CurvePoint> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != header.size()) {
      throw ParseError(fmt::format("expected {} fields, found {}", header.size(), fields.size()), i + 1);
    }
    const auto& e = fields[static_cast<std::size_t>(energy_col)];
    if (e.empty()) continue;
    CurvePoint p;
    p.label = fields[static_cast<std::size_t>(label_col)];
    try {
      p.energy = parse_double(e);
      p.coordinate = coord_col >= 0 ? parse_double(fields[static_cast<std::size_t>(coord_col)])
                                    : static_cast<double>(points.size());
    } catch (const FormatError& err) {
      throw ParseError(err.what(), i + 1);
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace vqechem::workflow
