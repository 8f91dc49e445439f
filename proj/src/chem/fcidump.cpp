// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqechem/chem/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "vqechem/error.hpp"

namespace vqechem::chem {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_real(std::string token) {
  // Fortran exponents: 1.0D-03.
  std::replace(token.begin(), token.end(), 'D', 'E');
  std::replace(token.begin(), token.end(), 'd', 'e');
  if (!token.empty() && token.front() == '+') token.erase(0, 1);
  double v = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::optional<long> parse_int(std::string_view token) {
  long v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

struct Header {
  std::map<std::string, std::vector<std::string>> keys;
  std::size_t body_start = 0;  // index of the first body line
};

// Splits "NORB=4,NELEC=2,ORBSYM=1,1,1,1," into keys; values following a key
// without their own '=' belong to the previous key.
void absorb_namelist(std::string_view text, Header& header, std::string& current_key, std::size_t line_no) {
  std::string token;
  auto flush = [&] {
    const auto t = std::string(trim(token));
    token.clear();
    if (t.empty()) return;
    const auto eq = t.find('=');
    if (eq != std::string::npos) {
      current_key = upper(trim(std::string_view(t).substr(0, eq)));
      if (current_key.empty()) throw ParseError("FCIDUMP header: empty key", line_no);
      header.keys[current_key];
      const auto value = std::string(trim(std::string_view(t).substr(eq + 1)));
      if (!value.empty()) header.keys[current_key].push_back(value);
    } else {
      if (current_key.empty()) throw ParseError("FCIDUMP header: value '" + t + "' without key", line_no);
      header.keys[current_key].push_back(t);
    }
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
}

Header parse_header(const std::vector<std::string>& lines) {
  Header header;
  std::string current_key;
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw ParseError("FCIDUMP: empty input", 1);
  std::string first = upper(trim(lines[i]));
  if (first.rfind("&FCI", 0) != 0) throw ParseError("FCIDUMP header must start with &FCI", i + 1);
  std::string rest = std::string(trim(lines[i])).substr(4);
  for (;;) {
    std::string_view body = rest;
    const std::string up = upper(rest);
    bool done = false;
    if (auto pos = up.find("&END"); pos != std::string::npos) {
      body = std::string_view(rest).substr(0, pos);
      done = true;
    } else if (auto slash = up.find('/'); slash != std::string::npos) {
      body = std::string_view(rest).substr(0, slash);
      done = true;
    }
    absorb_namelist(body, header, current_key, i + 1);
    ++i;
    if (done) break;
    if (i == lines.size()) throw ParseError("FCIDUMP header not terminated by &END or /", i);
    rest = lines[i];
  }
  header.body_start = i;
  return header;
}

long header_int(const Header& header, const std::string& key, std::size_t line_no) {
  auto it = header.keys.find(key);
  if (it == header.keys.end() || it->second.size() != 1) {
    throw ParseError("FCIDUMP header: missing or malformed " + key, line_no);
  }
  auto v = parse_int(it->second.front());
  if (!v) throw ParseError("FCIDUMP header: " + key + " is not an integer", line_no);
  return *v;
}

}  // namespace

MolecularIntegrals parse_fcidump(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string s(text);
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
  }
  const Header header = parse_header(lines);
  const long norb = header_int(header, "NORB", 1);
  const long nelec = header_int(header, "NELEC", 1);
  if (norb < 0 || nelec < 0) throw ParseError("FCIDUMP header: NORB and NELEC must be non-negative", 1);
  if (auto uhf = header.keys.find("UHF"); uhf != header.keys.end() && !uhf->second.empty()) {
    const auto flag = upper(uhf->second.front());
    if (flag == ".TRUE." || flag == "1" || flag == "T") throw FormatError("FCIDUMP: unrestricted files are not supported");
  }

  MolecularIntegrals out;
  const auto n = static_cast<std::size_t>(norb);
  out.n_spatial_orbitals = n;
  out.n_electrons = static_cast<int>(nelec);
  out.h = Eigen::MatrixXd::Zero(norb, norb);
  out.g = Tensor4(n);

  for (std::size_t li = header.body_start; li < lines.size(); ++li) {
    const std::string_view line = trim(lines[li]);
    if (line.empty()) continue;
    std::istringstream in{std::string(line)};
    std::string value_token;
    in >> value_token;
    const auto value = parse_real(value_token);
    if (!value) {
      throw FormatError(fmt::format("FCIDUMP line {}: value '{}' is not a real number", li + 1, value_token));
    }
    long idx[4];
    for (long& k : idx) {
      std::string tok;
      if (!(in >> tok)) throw FormatError(fmt::format("FCIDUMP line {}: expected four indices", li + 1));
      auto v = parse_int(tok);
      if (!v) throw FormatError(fmt::format("FCIDUMP line {}: index '{}' is not an integer", li + 1, tok));
      k = *v;
    }
    if (std::string extra; in >> extra) throw FormatError(fmt::format("FCIDUMP line {}: trailing tokens", li + 1));
    for (long k : idx) {
      if (k < 0 || k > norb) throw IndexError(fmt::format("FCIDUMP line {}: index {} outside 0..{}", li + 1, k, norb));
    }
    const auto [i, j, k, l] = std::tuple{idx[0], idx[1], idx[2], idx[3]};
    if (i > 0 && j > 0 && k > 0 && l > 0) {
      out.g.set_symmetric(i - 1, j - 1, k - 1, l - 1, *value);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      out.h(i - 1, j - 1) = out.h(j - 1, i - 1) = *value;
    } else if (i == 0 && j == 0 && k == 0 && l == 0) {
      out.constant_energy = *value;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // Orbital energy line; not part of the Hamiltonian.
    } else {
      throw IndexError(fmt::format("FCIDUMP line {}: unsupported index pattern {} {} {} {}", li + 1, i, j, k, l));
    }
  }
  out.validate();
  return out;
}

std::string write_fcidump(const MolecularIntegrals& integrals) {
  const std::size_t n = integrals.n_spatial_orbitals;
  std::string out = fmt::format("&FCI NORB={},NELEC={},MS2={},\n ORBSYM=", n, integrals.n_electrons,
                                integrals.n_electrons % 2);
  for (std::size_t i = 0; i < n; ++i) out += "1,";
  out += "\n ISYM=1,\n&END\n";
  const auto& g = integrals.g;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const double v = g(p, q, r, s);
          if (v != 0.0) out += fmt::format("{:.17g} {} {} {} {}\n", v, p + 1, q + 1, r + 1, s + 1);
        }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = integrals.h(p, q);
      if (v != 0.0) out += fmt::format("{:.17g} {} {} 0 0\n", v, p + 1, q + 1);
    }
  out += fmt::format("{:.17g} 0 0 0 0\n", integrals.constant_energy);
  return out;
}

MolecularIntegrals read_fcidump_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open FCIDUMP file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fcidump(buffer.str());
}

void write_fcidump_file(const std::filesystem::path& path, const MolecularIntegrals& integrals) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write FCIDUMP file " + path.string());
  out << write_fcidump(integrals);
}

}  // namespace vqechem::chem
