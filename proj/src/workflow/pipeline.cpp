// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/workflow/pipeline.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "vqechem/ansatz/ansatz.hpp"
#include "vqechem/chem/active_space.hpp"
#include "vqechem/chem/ao_integrals.hpp"
#include "vqechem/chem/fcidump.hpp"
#include "vqechem/chem/rhf.hpp"
#include "vqechem/error.hpp"
#include "vqechem/exactdiag/exactdiag.hpp"
#include "vqechem/measure/grouping.hpp"
#include "vqechem/qubit/jordan_wigner.hpp"
#include "vqechem/sim/statevector.hpp"
#include "vqechem/units.hpp"

namespace vqechem::workflow {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(AnsatzKind kind) { return kind == AnsatzKind::kUccsd ? "uccsd" : "hardware"; }

AnsatzKind parse_ansatz_kind(const std::string& name) {
  if (name == "uccsd") return AnsatzKind::kUccsd;
  if (name == "hardware") return AnsatzKind::kHardwareEfficient;
  throw Error(fmt::format("unknown ansatz '{}' (expected hardware or uccsd)", name));
}

std::vector<PointSource> h2_stretch_points(const std::vector<double>& lengths_angstrom) {
  std::vector<PointSource> points;
  for (double r : lengths_angstrom) {
    PointSource p;
    p.label = fmt::format("r={:.3f}", r);
    p.coordinate = r;
    p.geometry = chem::hydrogen_chain({r}, units::LengthUnit::kAngstrom);
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<PointSource> h3_exchange_points(const H3PathSpec& spec) {
  if (spec.count < 2) throw SpecError("h3_exchange needs at least 2 points");
  std::vector<PointSource> points;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double s = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(spec.count - 1);
    const double t = std::abs(s);
    const double bonded = spec.r_saddle + (spec.r_compressed - spec.r_saddle) * t;
    const double spectator = spec.r_saddle + (spec.r_far - spec.r_saddle) * t;
    const double r1 = s < 0.0 ? spectator : bonded;
    const double r2 = s < 0.0 ? bonded : spectator;
    PointSource p;
    p.label = fmt::format("s={:+.3f}", s);
    p.coordinate = s;
    p.geometry = chem::hydrogen_chain({r1, r2}, units::LengthUnit::kAngstrom);
    points.push_back(std::move(p));
  }
  return points;
}

chem::MolecularIntegrals integrals_from_molecule(const chem::Molecule& molecule) {
  const auto ao = chem::compute_ao_integrals(molecule);
  const int n = molecule.n_electrons();
  if (n > static_cast<int>(2 * ao.n_ao)) {
    throw Error(fmt::format("{} electrons do not fit in {} spatial orbitals", n, ao.n_ao));
  }
  const auto rhf = chem::run_rhf(ao, n % 2 == 0 ? n : n - 1);
  if (!rhf.converged) {
    throw ConvergenceError(fmt::format("RHF did not converge in {} iterations", rhf.n_iterations), rhf.total_energy);
  }
  return chem::transform_to_mo(ao, rhf, n);
}

chem::MolecularIntegrals load_integrals(const PointSource& source) {
  if (source.geometry) return integrals_from_molecule(*source.geometry);
  return chem::read_fcidump_file(source.fcidump);
}

PesPoint run_point(const PointSource& source, const RunSettings& settings, std::uint64_t seed) {
  PesPoint out;
  out.label = source.label;
  out.coordinate = source.coordinate;

  auto integrals = load_integrals(source);
  if (!settings.frozen.empty()) {
    integrals =
        chem::freeze_core(integrals, chem::ActiveSpaceSpec::freeze(settings.frozen, integrals.n_spatial_orbitals));
  }
  const auto h = qubit::molecular_qubit_hamiltonian(integrals);
  const std::size_t nq = h.n_qubits();
  const auto occupied = ansatz::hf_occupation(integrals.n_electrons);
  const auto circuit = settings.ansatz == AnsatzKind::kUccsd ? ansatz::build_uccsd(nq, occupied)
                                                             : ansatz::build_hardware_efficient(nq, settings.reps);

  vqe::OptimizerConfig opt = settings.optimizer;
  opt.seed = seed;
  vqe::EstimatorConfig est = settings.estimator;
  est.seed = seed;
  auto multi = vqe::run_vqe_restarts(h, circuit, occupied, opt, est, settings.restarts);

  exactdiag::GroundStateOptions gs;
  gs.keep_eigenvector = false;
  const auto fci = exactdiag::ground_state_energy(h, gs);

  out.ok = true;
  out.e_vqe = multi.best.final_energy;
  out.e_fci = fci.energy;
  out.e_hf = sim::expectation(sim::prepare_hf(nq, occupied), h);
  out.error_mha = (out.e_vqe - out.e_fci) * units::kHartreeToMilliHartree;
  out.n_qubits = nq;
  out.n_pauli_terms = h.size();
  out.n_groups = measure::group_commuting(h).size();
  out.n_parameters = circuit.n_parameters();
  out.vqe = std::move(multi.best);
  return out;
}

ScanResult cmd_scan(const ScanManifest& manifest) {
  ScanResult result;
  result.label = manifest.label;
  const std::size_t n = manifest.points.size();
  if (n == 0) throw ScanError("manifest has no points");
  result.points.resize(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto& src = manifest.points[i];
    try {
      result.points[i] = run_point(src, manifest.settings, manifest.base_seed + i);
    } catch (const std::exception& e) {
      PesPoint failed;
      failed.label = src.label;
      failed.coordinate = src.coordinate;
      failed.message = e.what();
      result.points[i] = std::move(failed);
    }
  }
  for (const auto& p : result.points) result.n_failed += p.ok ? 0 : 1;
  if (result.n_failed == n) {
    throw ScanError(fmt::format("all {} scan points failed; first error: {}", n, result.points.front().message));
  }
  return result;
}

std::string pes_csv(const ScanResult& scan) {
  std::string out = "geometry_label,coordinate,e_vqe,e_fci,error_mha,n_pauli_terms,n_groups,status\n";
  for (const auto& p : scan.points) {
    if (p.ok) {
      out += fmt::format("{},{:.6f},{:.10f},{:.10f},{:.6f},{},{},ok\n", p.label, p.coordinate, p.e_vqe, p.e_fci,
                         p.error_mha, p.n_pauli_terms, p.n_groups);
    } else {
      out += fmt::format("{},{:.6f},,,,,,failed\n", p.label, p.coordinate);
    }
  }
  return out;
}

std::string scan_json(const ScanResult& scan) {
  ordered_json doc;
  doc["label"] = scan.label;
  doc["n_points"] = scan.points.size();
  doc["n_failed"] = scan.n_failed;
  ordered_json rows = ordered_json::array();
  for (const auto& p : scan.points) {
    ordered_json row;
    row["geometry_label"] = p.label;
    row["coordinate"] = p.coordinate;
    row["status"] = p.ok ? "ok" : "failed";
    if (p.ok) {
      row["e_vqe"] = p.e_vqe;
      row["e_fci"] = p.e_fci;
      row["e_hf"] = p.e_hf;
      row["error_mha"] = p.error_mha;
      row["n_qubits"] = p.n_qubits;
      row["n_pauli_terms"] = p.n_pauli_terms;
      row["n_groups"] = p.n_groups;
      row["n_parameters"] = p.n_parameters;
      row["n_function_evaluations"] = p.vqe.n_function_evaluations;
      row["n_iterations"] = p.vqe.n_iterations;
      row["converged"] = p.vqe.converged;
      row["termination"] = vqe::to_string(p.vqe.termination);
    } else {
      row["error"] = p.message;
    }
    rows.push_back(std::move(row));
  }
  doc["points"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::vector<CurvePoint> curve_from_scan(const ScanResult& scan, bool use_fci) {
  std::vector<CurvePoint> curve;
  for (const auto& p : scan.points)
    if (p.ok) curve.push_back({p.label, p.coordinate, use_fci ? p.e_fci : p.e_vqe});
  return curve;
}

namespace {

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

vqe::OptimizerConfig parse_optimizer(const json& j) {
  vqe::OptimizerConfig c;
  if (j.is_string()) {
    c.kind = vqe::parse_optimizer_kind(j.get<std::string>());
    return c;
  }
  c.kind = vqe::parse_optimizer_kind(get_or<std::string>(j, "kind", "simplex"));
  c.max_iterations = get_or<std::size_t>(j, "max_iterations", c.max_iterations);
  c.convergence_threshold = get_or<double>(j, "convergence_threshold", c.convergence_threshold);
  c.spsa_window = get_or<std::size_t>(j, "spsa_window", c.spsa_window);
  c.simplex_initial_step = get_or<double>(j, "simplex_initial_step", c.simplex_initial_step);
  c.simplex_xtol = get_or<double>(j, "simplex_xtol", c.simplex_xtol);
  if (j.contains("spsa")) {
    const auto& s = j.at("spsa");
    c.spsa.a = get_or<double>(s, "a", c.spsa.a);
    c.spsa.c = get_or<double>(s, "c", c.spsa.c);
    c.spsa.big_a = get_or<double>(s, "A", c.spsa.big_a);
    c.spsa.alpha = get_or<double>(s, "alpha", c.spsa.alpha);
    c.spsa.gamma = get_or<double>(s, "gamma", c.spsa.gamma);
  }
  c.validate();
  return c;
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
  if (count < 2) throw SpecError("generator count must be >= 2");
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return v;
}

std::vector<PointSource> generate(const json& g) {
  const auto type = g.at("type").get<std::string>();
  if (type == "h2_stretch") {
    std::vector<double> r;
    if (g.contains("coordinates")) {
      r = g.at("coordinates").get<std::vector<double>>();
    } else {
      r = linspace(g.at("start").get<double>(), g.at("stop").get<double>(), g.at("count").get<std::size_t>());
    }
    for (double extra : get_or<std::vector<double>>(g, "append", {})) r.push_back(extra);
    return h2_stretch_points(r);
  }
  if (type == "h3_exchange") {
    H3PathSpec spec;
    spec.count = get_or<std::size_t>(g, "count", spec.count);
    spec.r_saddle = get_or<double>(g, "r_saddle", spec.r_saddle);
    spec.r_compressed = get_or<double>(g, "r_compressed", spec.r_compressed);
    spec.r_far = get_or<double>(g, "r_far", spec.r_far);
    return h3_exchange_points(spec);
  }
  throw SpecError(fmt::format("unknown generator type '{}'", type));
}

}  // namespace

ScanManifest parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifest: ") + e.what(), 0);
  }
  ScanManifest m;
  try {
    m.label = get_or<std::string>(doc, "label", "scan");
    m.coordinate_unit = get_or<std::string>(doc, "coordinate_unit", m.coordinate_unit);
    if (m.coordinate_unit != "angstrom" && m.coordinate_unit != "bohr" && m.coordinate_unit != "dimensionless") {
      throw SpecError(fmt::format("coordinate_unit '{}' is not angstrom, bohr or dimensionless", m.coordinate_unit));
    }
    m.base_seed = get_or<std::uint64_t>(doc, "base_seed", m.base_seed);

    if (doc.contains("generator")) m.points = generate(doc.at("generator"));
    for (const auto& p : get_or<json>(doc, "points", json::array())) {
      PointSource src;
      src.label = p.at("label").get<std::string>();
      src.coordinate = get_or<double>(p, "coordinate", static_cast<double>(m.points.size()));
      const bool has_geometry = p.contains("geometry"), has_fcidump = p.contains("fcidump");
      if (has_geometry == has_fcidump) {
        throw SpecError(fmt::format("point '{}' needs exactly one of geometry or fcidump", src.label));
      }
      if (has_geometry) {
        src.geometry = chem::parse_geometry_json(p.at("geometry").dump());
      } else {
        std::filesystem::path path = p.at("fcidump").get<std::string>();
        src.fcidump = path.is_absolute() || base_dir.empty() ? path : base_dir / path;
      }
      m.points.push_back(std::move(src));
    }
    std::set<std::string> labels;
    for (const auto& p : m.points)
      if (!labels.insert(p.label).second) throw SpecError(fmt::format("duplicate point label '{}'", p.label));

    auto& s = m.settings;
    if (doc.contains("active_space")) {
      s.frozen = get_or<std::vector<std::size_t>>(doc.at("active_space"), "frozen", {});
    }
    s.ansatz = parse_ansatz_kind(get_or<std::string>(doc, "ansatz", "uccsd"));
    s.reps = get_or<std::size_t>(doc, "reps", s.reps);
    s.restarts = get_or<std::size_t>(doc, "restarts", s.restarts);
    if (s.restarts < 1) throw SpecError("restarts must be >= 1");
    if (doc.contains("optimizer")) s.optimizer = parse_optimizer(doc.at("optimizer"));
    s.estimator.mode = vqe::parse_estimator_mode(get_or<std::string>(doc, "mode", "exact"));
    s.estimator.shots_per_group = get_or<std::uint64_t>(doc, "shots", s.estimator.shots_per_group);
    const auto allocation = get_or<std::string>(doc, "shot_allocation", "uniform");
    if (allocation == "weighted") {
      s.estimator.allocation = measure::ShotAllocation::kWeighted;
    } else if (allocation != "uniform") {
      throw SpecError(fmt::format("shot_allocation '{}' is not uniform or weighted", allocation));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what(), 0);
  }
  return m;
}

ScanManifest read_manifest_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open manifest '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path());
}

}  // namespace vqechem::workflow
