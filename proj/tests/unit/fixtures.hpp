// Copyright 2026 The vqechem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace testing {

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(VQECHEM_FIXTURE_DIR) / name; }
inline std::filesystem::path data_file(const std::string& name) { return std::filesystem::path(VQECHEM_DATA_DIR) / name; }

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline nlohmann::json load_json(const std::string& name) { return nlohmann::json::parse(slurp(fixture(name))); }

inline const char* kH2sFixtures[] = {"h2s_sto3g_nonrel_eq.fcidump", "h2s_sto3g_x2c_eq.fcidump",
                                     "h2s_sto3g_nonrel_stretch.fcidump", "h2s_sto3g_x2c_stretch.fcidump"};

}  // namespace testing
