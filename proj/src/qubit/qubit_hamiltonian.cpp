// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/qubit/qubit_hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "vqechem/error.hpp"

namespace vqechem::qubit {

QubitHamiltonian QubitHamiltonian::from_terms(std::size_t n_qubits, std::vector<PauliTerm> terms) {
  QubitHamiltonian h(n_qubits);
  std::unordered_map<PauliString, std::size_t> index;
  std::vector<PauliTerm> merged;
  for (const auto& t : terms) {
    if (t.string.n_qubits != n_qubits) throw ShapeError("term acts on a different number of qubits");
    if (!std::isfinite(t.coefficient)) throw FormatError("non-finite Hamiltonian coefficient");
    auto [it, inserted] = index.emplace(t.string, merged.size());
    if (inserted) {
      merged.push_back(t);
    } else {
      merged[it->second].coefficient += t.coefficient;
    }
  }
  std::erase_if(merged, [](const PauliTerm& t) { return std::abs(t.coefficient) < kPruneThreshold; });
  std::sort(merged.begin(), merged.end(),
            [](const PauliTerm& a, const PauliTerm& b) { return a.string.str() < b.string.str(); });
  h.terms_ = std::move(merged);
  return h;
}

double QubitHamiltonian::identity_coefficient() const {
  for (const auto& t : terms_) {
    if (t.string.is_identity()) return t.coefficient;
  }
  return 0.0;
}

std::string QubitHamiltonian::to_text() const {
  std::string out;
  for (const auto& t : terms_) out += fmt::format("{:.17g} {}\n", t.coefficient, t.string.str());
  return out;
}

QubitHamiltonian QubitHamiltonian::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<PauliTerm> terms;
  std::size_t n = 0;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string coeff, letters;
    if (!(ls >> coeff)) continue;
    if (!(ls >> letters)) throw ParseError("Hamiltonian term without Pauli string", line_no);
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(coeff.data(), coeff.data() + coeff.size(), w);
    if (ec != std::errc() || ptr != coeff.data() + coeff.size()) throw ParseError("bad coefficient '" + coeff + "'", line_no);
    auto p = PauliString::from_letters(letters);
    if (!terms.empty() && p.n_qubits != n) throw ParseError("inconsistent Pauli string length", line_no);
    n = p.n_qubits;
    terms.push_back({w, p});
  }
  return from_terms(n, std::move(terms));
}

}  // namespace vqechem::qubit
