// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vqechem::vqe {

enum class OptimizerKind { kSpsa, kSimplex };

std::string to_string(OptimizerKind kind);
/// Accepts "spsa" or "simplex"; throws Error otherwise.
OptimizerKind parse_optimizer_kind(const std::string& name);

struct SpsaGains {
  double a = 0.1;
  double c = 0.1;
  double big_a = 10.0;
  double alpha = 0.602;
  double gamma = 0.101;
};

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::kSimplex;
  std::size_t max_iterations = 1000;
  double convergence_threshold = 1e-4;
  std::uint64_t seed = 7;
  SpsaGains spsa;
  /// SPSA stops once the best value improved by less than the threshold
  /// over this many iterations.
  std::size_t spsa_window = 20;
  /// Edge length of the initial simplex along each coordinate axis.
  double simplex_initial_step = 0.1;
  // Optional extra simplex stop: max vertex distance from the best vertex.
  // 0 disables it.
  double simplex_xtol = 0.0;

  /// Throws Error on non-positive thresholds or a zero iteration cap.
  void validate() const;
};

enum class Termination { kConverged, kMaxIterations, kNoParameters };

std::string to_string(Termination t);

struct VqeResult {
  double final_energy = 0.0;
  std::vector<double> final_parameters;
  /// One entry per iteration; final_energy is its minimum.
  std::vector<double> energy_trace;
  /// Every objective value in evaluation order.
  std::vector<double> evaluations;
  std::size_t n_function_evaluations = 0;
  std::size_t n_iterations = 0;
  bool converged = false;
  Termination termination = Termination::kMaxIterations;
};

using Objective = std::function<double(std::span<const double>)>;

/// Records f(theta_{k+1}) as the trace entry of iteration k, so each
/// iteration costs three evaluations.
VqeResult spsa_minimize(const Objective& f, std::vector<double> theta0, const OptimizerConfig& config);

/// Nelder-Mead; the trace holds the best vertex value after each iteration.
VqeResult simplex_minimize(const Objective& f, std::vector<double> theta0, const OptimizerConfig& config);

VqeResult minimize(const Objective& f, std::vector<double> theta0, const OptimizerConfig& config);

/// `iteration,energy,best_energy`, one row per trace entry, 1-based.
std::string trace_csv(const VqeResult& result);

}  // namespace vqechem::vqe
