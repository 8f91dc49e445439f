// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

// vqechem command-line driver.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "vqechem/chem/fcidump.hpp"
#include "vqechem/chem/molecule.hpp"
#include "vqechem/error.hpp"
#include "vqechem/exactdiag/exactdiag.hpp"
#include "vqechem/qubit/jordan_wigner.hpp"
#include "vqechem/chem/active_space.hpp"
#include "vqechem/units.hpp"
#include "vqechem/workflow/analysis.hpp"
#include "vqechem/workflow/pipeline.hpp"

namespace {

using namespace vqechem;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write '{}'", path));
  out << text;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw SpecError(fmt::format("--freeze: '{}' is not a non-negative integer", item));
    }
  }
  return out;
}

// Options shared by every command that runs a VQE.
struct RunOptions {
  std::string ansatz;
  std::size_t reps = 0;
  std::string optimizer;
  std::string mode;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string freeze;
  std::size_t restarts = 0;
  std::size_t max_iterations = 0;
  double threshold = 0.0;

  void add_to(CLI::App* app) {
    app->add_option("--ansatz", ansatz, "hardware or uccsd")->check(CLI::IsMember({"hardware", "uccsd"}));
    app->add_option("--reps", reps, "hardware-efficient repetitions");
    app->add_option("--optimizer", optimizer, "spsa or simplex")->check(CLI::IsMember({"spsa", "simplex"}));
    app->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    app->add_option("--shots", shots, "shots per measurement group (sampled mode)");
    app->add_option("--seed", seed, "base seed");
    app->add_option("--freeze", freeze, "comma-separated frozen spatial orbitals");
    app->add_option("--restarts", restarts, "independent optimizer starts");
    app->add_option("--max-iterations", max_iterations, "optimizer iteration cap");
    app->add_option("--threshold", threshold, "convergence threshold (Hartree)");
  }

  // Overrides only the values given on the command line.
  void apply(CLI::App* app, workflow::ScanManifest& m) const {
    auto& s = m.settings;
    if (app->count("--ansatz")) s.ansatz = workflow::parse_ansatz_kind(ansatz);
    if (app->count("--reps")) s.reps = reps;
    if (app->count("--optimizer")) s.optimizer.kind = vqe::parse_optimizer_kind(optimizer);
    if (app->count("--mode")) s.estimator.mode = vqe::parse_estimator_mode(mode);
    if (app->count("--shots")) s.estimator.shots_per_group = shots;
    if (app->count("--seed")) m.base_seed = seed;
    if (app->count("--freeze")) s.frozen = parse_indices(freeze);
    if (app->count("--restarts")) s.restarts = restarts;
    if (app->count("--max-iterations")) s.optimizer.max_iterations = max_iterations;
    if (app->count("--threshold")) s.optimizer.convergence_threshold = threshold;
    s.optimizer.validate();
    if (s.restarts < 1) throw SpecError("--restarts must be >= 1");
  }
};

// Single-point source: --geometry, --fcidump, --h2 or one point of --manifest.
struct SourceOptions {
  std::string geometry;
  std::string fcidump;
  double h2 = 0.0;
  std::string manifest;
  std::string point;

  void add_to(CLI::App* app, bool allow_fcidump = true) {
    auto* g = app->add_option("--geometry", geometry, "geometry JSON file");
    auto* r = app->add_option("--h2", h2, "H2 bond length in Angstrom");
    g->excludes(r);
    if (allow_fcidump) {
      auto* f = app->add_option("--fcidump", fcidump, "FCIDUMP file");
      f->excludes(g)->excludes(r);
    }
  }

  void add_manifest(CLI::App* app) {
    app->add_option("--manifest", manifest, "scan manifest (JSON)");
    app->add_option("--point", point, "geometry label inside --manifest (default: first point)");
  }

  workflow::ScanManifest resolve(CLI::App* app) const {
    workflow::ScanManifest m;
    if (!manifest.empty()) {
      m = workflow::read_manifest_file(manifest);
      if (m.points.empty()) throw SpecError("manifest has no points");
      std::size_t pick = 0;
      if (!point.empty()) {
        pick = m.points.size();
        for (std::size_t i = 0; i < m.points.size(); ++i)
          if (m.points[i].label == point) pick = i;
        if (pick == m.points.size()) throw SpecError(fmt::format("no point labelled '{}'", point));
      }
      m.base_seed += pick;
      m.points = {m.points[pick]};
      return m;
    }
    m.label = "single";
    workflow::PointSource src;
    if (!geometry.empty()) {
      src.label = std::filesystem::path(geometry).stem().string();
      src.geometry = chem::parse_geometry_json(read_file(geometry));
    } else if (!fcidump.empty()) {
      src.label = std::filesystem::path(fcidump).stem().string();
      src.fcidump = fcidump;
    } else if (app->count("--h2")) {
      src = workflow::h2_stretch_points({h2}).front();
    } else {
      throw SpecError("give one of --geometry, --fcidump, --h2 or --manifest");
    }
    m.points = {src};
    return m;
  }
};

void print_point_text(const workflow::PesPoint& p) {
  fmt::print("{}: E_VQE = {:.10f} Ha, E_FCI = {:.10f} Ha, error = {:.4f} mHa\n", p.label, p.e_vqe, p.e_fci,
             p.error_mha);
  fmt::print("  {} qubits, {} Pauli terms, {} groups, {} parameters, {} evaluations, {}\n", p.n_qubits,
             p.n_pauli_terms, p.n_groups, p.n_parameters, p.vqe.n_function_evaluations,
             vqe::to_string(p.vqe.termination));
}

workflow::ScanResult run_single(const workflow::ScanManifest& m) {
  workflow::ScanResult r;
  r.label = m.label;
  r.points.push_back(workflow::run_point(m.points.front(), m.settings, m.base_seed));
  return r;
}

std::vector<workflow::CurvePoint> load_curve(const std::string& path, const std::string& column) {
  return workflow::parse_curve_csv(read_file(path), column);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vqechem: variational quantum eigensolver workflows for small molecules"};
  app.require_subcommand(1);
  bool json = false;
  std::string out;

  // fcidump-gen
  auto* gen = app.add_subcommand("fcidump-gen", "hydrogen geometry -> FCIDUMP");
  SourceOptions gen_src;
  gen_src.add_to(gen, false);
  std::string gen_freeze;
  gen->add_option("--freeze", gen_freeze, "comma-separated frozen spatial orbitals");
  gen->add_option("--out", out, "output FCIDUMP path (default stdout)");

  // vqe
  auto* vqe_cmd = app.add_subcommand("vqe", "single-point VQE");
  SourceOptions vqe_src;
  vqe_src.add_to(vqe_cmd);
  vqe_src.add_manifest(vqe_cmd);
  RunOptions vqe_run;
  vqe_run.add_to(vqe_cmd);
  vqe_cmd->add_option("--out", out, "PES-format CSV row");
  vqe_cmd->add_flag("--json", json, "JSON summary on stdout");

  // fci
  auto* fci = app.add_subcommand("fci", "exact ground-state energy");
  SourceOptions fci_src;
  fci_src.add_to(fci);
  std::string fci_freeze;
  fci->add_option("--freeze", fci_freeze, "comma-separated frozen spatial orbitals");
  fci->add_flag("--json", json, "JSON summary on stdout");

  // scan
  auto* scan = app.add_subcommand("scan", "potential energy surface scan");
  std::string scan_manifest;
  scan->add_option("--manifest", scan_manifest, "scan manifest (JSON)")->required();
  RunOptions scan_run;
  scan_run.add_to(scan);
  scan->add_option("--out", out, "PES CSV path (default stdout)");
  scan->add_flag("--json", json, "JSON summary on stdout");

  // fit
  auto* fit = app.add_subcommand("fit", "equilibrium geometry and dissociation energy from a curve");
  std::string fit_input, fit_column;
  fit->add_option("--input", fit_input, "curve CSV")->required();
  fit->add_option("--column", fit_column, "energy column (default energy, else e_vqe)");
  fit->add_flag("--json", json, "JSON summary on stdout");

  // barrier
  auto* barrier = app.add_subcommand("barrier", "activation energy from a reaction-path curve");
  std::string barrier_input, barrier_column;
  barrier->add_option("--input", barrier_input, "curve CSV")->required();
  barrier->add_option("--column", barrier_column, "energy column (default energy, else e_vqe)");
  barrier->add_flag("--json", json, "JSON summary on stdout");

  // compare
  auto* compare = app.add_subcommand("compare", "pointwise energy shift between two curves");
  std::string curve_a, curve_b, compare_column;
  compare->add_option("--curve-a", curve_a, "first curve CSV")->required();
  compare->add_option("--curve-b", curve_b, "second curve CSV")->required();
  compare->add_option("--column", compare_column, "energy column (default energy, else e_vqe)");
  compare->add_option("--out", out, "shift CSV path (default stdout)");
  compare->add_flag("--json", json, "JSON summary on stdout");

  // trace
  auto* trace = app.add_subcommand("trace", "convergence trace of a single-point VQE");
  SourceOptions trace_src;
  trace_src.add_to(trace);
  trace_src.add_manifest(trace);
  RunOptions trace_run;
  trace_run.add_to(trace);
  trace->add_option("--out", out, "trace CSV path (default stdout)");
  trace->add_flag("--json", json, "JSON summary on stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      auto m = gen_src.resolve(gen);
      auto integrals = workflow::load_integrals(m.points.front());
      const auto frozen = parse_indices(gen_freeze);
      if (!frozen.empty()) {
        integrals = chem::freeze_core(integrals, chem::ActiveSpaceSpec::freeze(frozen, integrals.n_spatial_orbitals));
      }
      write_output(out, chem::write_fcidump(integrals));
    } else if (*vqe_cmd || *trace) {
      CLI::App* cmd = *vqe_cmd ? vqe_cmd : trace;
      const SourceOptions& src = *vqe_cmd ? vqe_src : trace_src;
      const RunOptions& run = *vqe_cmd ? vqe_run : trace_run;
      auto m = src.resolve(cmd);
      run.apply(cmd, m);
      const auto result = run_single(m);
      const auto& p = result.points.front();
      if (*vqe_cmd) {
        if (!out.empty()) write_output(out, workflow::pes_csv(result));
        if (json) {
          std::cout << workflow::scan_json(result);
        } else {
          print_point_text(p);
        }
      } else {
        const std::string csv = vqe::trace_csv(p.vqe);
        if (!out.empty() || !json) write_output(out, csv);
        if (json) {
          ordered_json doc;
          doc["geometry_label"] = p.label;
          doc["n_iterations"] = p.vqe.n_iterations;
          doc["n_function_evaluations"] = p.vqe.n_function_evaluations;
          doc["final_energy"] = p.vqe.final_energy;
          doc["e_fci"] = p.e_fci;
          doc["termination"] = vqe::to_string(p.vqe.termination);
          std::cout << doc.dump(2) << "\n";
        }
      }
    } else if (*fci) {
      auto m = fci_src.resolve(fci);
      auto integrals = workflow::load_integrals(m.points.front());
      const auto frozen = parse_indices(fci_freeze);
      if (!frozen.empty()) {
        integrals = chem::freeze_core(integrals, chem::ActiveSpaceSpec::freeze(frozen, integrals.n_spatial_orbitals));
      }
      const auto h = qubit::molecular_qubit_hamiltonian(integrals);
      exactdiag::GroundStateOptions opts;
      opts.keep_eigenvector = false;
      const auto gs = exactdiag::ground_state_energy(h, opts);
      if (json) {
        ordered_json doc;
        doc["geometry_label"] = m.points.front().label;
        doc["e_fci"] = gs.energy;
        doc["residual_norm"] = gs.residual_norm;
        doc["iterations"] = gs.iterations;
        doc["n_qubits"] = h.n_qubits();
        doc["n_pauli_terms"] = h.size();
        doc["method"] = gs.method == exactdiag::Method::kDense ? "dense" : "lanczos";
        std::cout << doc.dump(2) << "\n";
      } else {
        fmt::print("{}: E_FCI = {:.10f} Ha ({} qubits, {} Pauli terms)\n", m.points.front().label, gs.energy,
                   h.n_qubits(), h.size());
      }
    } else if (*scan) {
      auto m = workflow::read_manifest_file(scan_manifest);
      scan_run.apply(scan, m);
      const auto result = workflow::cmd_scan(m);
      if (!out.empty() || !json) write_output(out, workflow::pes_csv(result));
      if (json) std::cout << workflow::scan_json(result);
      for (const auto& p : result.points)
        if (!p.ok) std::cerr << fmt::format("warning: point {} failed: {}\n", p.label, p.message);
    } else if (*fit) {
      const auto curve = load_curve(fit_input, fit_column);
      const auto eq = workflow::fit_equilibrium(curve);
      std::optional<double> de;
      std::string de_error;
      try {
        de = workflow::dissociation_energy(curve);
      } catch (const FitError& e) {
        de_error = e.what();
      }
      if (json) {
        ordered_json doc;
        doc["n_points"] = curve.size();
        doc["r_e"] = eq.coordinate;
        doc["e_min"] = eq.energy;
        if (de) doc["dissociation_energy_kcal_per_mol"] = *de;
        std::cout << doc.dump(2) << "\n";
      } else {
        fmt::print("R_e = {:.6f}, E_min = {:.10f} Ha\n", eq.coordinate, eq.energy);
        if (de) fmt::print("D_e = {:.4f} kcal/mol\n", *de);
      }
    } else if (*barrier) {
      const auto b = workflow::activation_energy(load_curve(barrier_input, barrier_column));
      if (json) {
        ordered_json doc;
        doc["saddle_coordinate"] = b.saddle.coordinate;
        doc["saddle_energy"] = b.saddle.energy;
        doc["reactant_coordinate"] = b.reactant.coordinate;
        doc["reactant_energy"] = b.reactant.energy;
        doc["barrier_kcal_per_mol"] = b.kcal_per_mol;
        std::cout << doc.dump(2) << "\n";
      } else {
        fmt::print("barrier = {:.4f} kcal/mol (saddle at {:.6f}, reactant at {:.6f})\n", b.kcal_per_mol,
                   b.saddle.coordinate, b.reactant.coordinate);
      }
    } else if (*compare) {
      const auto report =
          workflow::compare_curves(load_curve(curve_a, compare_column), load_curve(curve_b, compare_column));
      if (!out.empty() || !json) write_output(out, workflow::shift_csv(report));
      if (json) {
        ordered_json doc;
        ordered_json rows = ordered_json::array();
        for (const auto& r : report.rows) rows.push_back({{"geometry_label", r.label}, {"delta_ha", r.delta}});
        doc["rows"] = std::move(rows);
        doc["mean"] = report.mean;
        doc["min"] = report.min;
        doc["max"] = report.max;
        std::cout << doc.dump(2) << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
