// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vqechem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched sizes, qubit counts, or out-of-range qubit indices.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedElementError : public Error {
 public:
  using Error::Error;
};

class SingularGeometryError : public Error {
 public:
  using Error::Error;
};

/// SCF did not converge; carries the energy of the last iteration.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_energy)
      : Error(what), last_energy_(last_energy) {}
  double last_energy() const noexcept { return last_energy_; }

 private:
  double last_energy_;
};

/// Malformed FCIDUMP header or manifest document; carries a 1-based line
/// number (0 when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

/// Invalid active-space specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

class NonHermitianError : public Error {
 public:
  using Error::Error;
};

/// Objective returned a non-finite value; carries the trace recorded so far.
class DivergedError : public Error {
 public:
  DivergedError(const std::string& what, std::vector<double> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

/// Lanczos did not reach the residual target; carries the best estimate.
class IterationLimitError : public Error {
 public:
  IterationLimitError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

/// PES analysis errors.
class FitError : public Error {
 public:
  using Error::Error;
};

class NoBracketError : public FitError {
 public:
  using FitError::FitError;
};

class NoBarrierError : public FitError {
 public:
  using FitError::FitError;
};

class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Scan in which every point failed.
class ScanError : public Error {
 public:
  using Error::Error;
};

}  // namespace vqechem
