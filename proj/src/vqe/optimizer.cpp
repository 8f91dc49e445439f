// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/vqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "vqechem/error.hpp"

namespace vqechem::vqe {

std::string to_string(OptimizerKind kind) { return kind == OptimizerKind::kSpsa ? "spsa" : "simplex"; }

OptimizerKind parse_optimizer_kind(const std::string& name) {
  if (name == "spsa") return OptimizerKind::kSpsa;
  if (name == "simplex") return OptimizerKind::kSimplex;
  throw Error(fmt::format("unknown optimizer '{}' (expected spsa or simplex)", name));
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::kConverged: return "converged";
    case Termination::kMaxIterations: return "max_iterations";
    case Termination::kNoParameters: return "no_parameters";
  }
  return "unknown";
}

void OptimizerConfig::validate() const {
  if (max_iterations < 1) throw Error("optimizer: max_iterations must be >= 1");
  if (!(convergence_threshold > 0.0)) throw Error("optimizer: convergence_threshold must be > 0");
  if (!(spsa.a > 0.0) || !(spsa.c > 0.0) || spsa.big_a < 0.0) throw Error("optimizer: SPSA gains must be positive");
  if (spsa_window < 1) throw Error("optimizer: spsa_window must be >= 1");
  if (!(simplex_initial_step > 0.0)) throw Error("optimizer: simplex_initial_step must be > 0");
  if (!(simplex_xtol >= 0.0)) throw Error("optimizer: simplex_xtol must be >= 0");
}

namespace {

// Counts and records evaluations; rejects non-finite values.
class Recorder {
 public:
  Recorder(const Objective& f, VqeResult& result) : f_(f), result_(result) {}

  double operator()(std::span<const double> theta) {
    const double value = f_(theta);
    ++result_.n_function_evaluations;
    result_.evaluations.push_back(value);
    if (!std::isfinite(value)) {
      throw DivergedError(fmt::format("objective returned {} at evaluation {}", value, result_.n_function_evaluations),
                          result_.energy_trace);
    }
    return value;
  }

 private:
  const Objective& f_;
  VqeResult& result_;
};

VqeResult no_parameter_result(const Objective& f) {
  VqeResult result;
  Recorder eval(f, result);
  const double e = eval({});
  result.energy_trace.push_back(e);
  result.final_energy = e;
  result.n_iterations = 1;
  result.converged = true;
  result.termination = Termination::kNoParameters;
  return result;
}

}  // namespace

VqeResult spsa_minimize(const Objective& f, std::vector<double> theta0, const OptimizerConfig& config) {
  config.validate();
  if (theta0.empty()) return no_parameter_result(f);
  const std::size_t d = theta0.size();
  VqeResult result;
  Recorder eval(f, result);
  std::mt19937_64 rng(config.seed);

  std::vector<double> theta = std::move(theta0);
  std::vector<double> plus(d), minus(d), delta(d);
  std::vector<double> best_so_far;
  double best = std::numeric_limits<double>::infinity();
  const auto& g = config.spsa;

  for (std::size_t k = 0; k < config.max_iterations; ++k) {
    const double kk = static_cast<double>(k);
    const double ak = g.a / std::pow(g.big_a + kk + 1.0, g.alpha);
    const double ck = g.c / std::pow(kk + 1.0, g.gamma);
    for (std::size_t i = 0; i < d; ++i) {
      delta[i] = (rng() >> 63) ? 1.0 : -1.0;
      plus[i] = theta[i] + ck * delta[i];
      minus[i] = theta[i] - ck * delta[i];
    }
    const double f_plus = eval(plus);
    const double f_minus = eval(minus);
    const double diff = (f_plus - f_minus) / (2.0 * ck);
    for (std::size_t i = 0; i < d; ++i) theta[i] -= ak * diff / delta[i];

    const double value = eval(theta);
    result.energy_trace.push_back(value);
    if (value < best) {
      best = value;
      result.final_parameters = theta;
    }
    best_so_far.push_back(best);
    result.n_iterations = k + 1;

    const std::size_t w = config.spsa_window;
    if (best_so_far.size() > w && best_so_far[best_so_far.size() - 1 - w] - best < config.convergence_threshold) {
      result.converged = true;
      result.termination = Termination::kConverged;
      break;
    }
  }
  result.final_energy = best;
  if (!result.converged) result.termination = Termination::kMaxIterations;
  return result;
}

VqeResult simplex_minimize(const Objective& f, std::vector<double> theta0, const OptimizerConfig& config) {
  config.validate();
  if (theta0.empty()) return no_parameter_result(f);
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const std::size_t d = theta0.size();
  VqeResult result;
  Recorder eval(f, result);

  std::vector<std::vector<double>> x(d + 1, theta0);
  for (std::size_t i = 0; i < d; ++i) x[i + 1][i] += config.simplex_initial_step;
  std::vector<double> fx(d + 1);
  for (std::size_t i = 0; i <= d; ++i) fx[i] = eval(x[i]);

  std::vector<std::size_t> order(d + 1);
  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    std::vector<std::vector<double>> xs(d + 1);
    std::vector<double> fs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      xs[i] = std::move(x[order[i]]);
      fs[i] = fx[order[i]];
    }
    x = std::move(xs);
    fx = std::move(fs);
  };
  auto along = [&](const std::vector<double>& centroid, double t) {
    // centroid + t * (centroid - worst)
    std::vector<double> p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = centroid[i] + t * (centroid[i] - x[d][i]);
    return p;
  };

  sort_vertices();
  for (std::size_t k = 0; k < config.max_iterations; ++k) {
    std::vector<double> centroid(d, 0.0);
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t i = 0; i < d; ++i) centroid[i] += x[v][i] / static_cast<double>(d);

    auto xr = along(centroid, kReflect);
    const double fr = eval(xr);
    if (fr < fx[0]) {
      auto xe = along(centroid, kExpand);
      const double fe = eval(xe);
      if (fe < fr) {
        x[d] = std::move(xe);
        fx[d] = fe;
      } else {
        x[d] = std::move(xr);
        fx[d] = fr;
      }
    } else if (fr < fx[d - 1]) {
      x[d] = std::move(xr);
      fx[d] = fr;
    } else {
      bool shrink = false;
      if (fr < fx[d]) {
        auto xc = along(centroid, kContract * kReflect);
        const double fc = eval(xc);
        if (fc <= fr) {
          x[d] = std::move(xc);
          fx[d] = fc;
        } else {
          shrink = true;
        }
      } else {
        auto xc = along(centroid, -kContract);
        const double fc = eval(xc);
        if (fc < fx[d]) {
          x[d] = std::move(xc);
          fx[d] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (std::size_t v = 1; v <= d; ++v) {
          for (std::size_t i = 0; i < d; ++i) x[v][i] = x[0][i] + kShrink * (x[v][i] - x[0][i]);
          fx[v] = eval(x[v]);
        }
      }
    }
    sort_vertices();
    result.energy_trace.push_back(fx[0]);
    result.n_iterations = k + 1;
    double size = 0.0;
    if (config.simplex_xtol > 0.0) {
      for (std::size_t v = 1; v <= d; ++v)
        for (std::size_t i = 0; i < d; ++i) size = std::max(size, std::abs(x[v][i] - x[0][i]));
    }
    if (fx[d] - fx[0] < config.convergence_threshold && size <= config.simplex_xtol) {
      result.converged = true;
      result.termination = Termination::kConverged;
      break;
    }
  }
  result.final_energy = fx[0];
  result.final_parameters = x[0];
  if (!result.converged) result.termination = Termination::kMaxIterations;
  return result;
}

VqeResult minimize(const Objective& f, std::vector<double> theta0, const OptimizerConfig& config) {
  return config.kind == OptimizerKind::kSpsa ? spsa_minimize(f, std::move(theta0), config)
                                             : simplex_minimize(f, std::move(theta0), config);
}

std::string trace_csv(const VqeResult& result) {
  std::string out = "iteration,energy,best_energy\n";
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < result.energy_trace.size(); ++i) {
    best = std::min(best, result.energy_trace[i]);
    out += fmt::format("{},{:.12f},{:.12f}\n", i + 1, result.energy_trace[i], best);
  }
  return out;
}

}  // namespace vqechem::vqe
