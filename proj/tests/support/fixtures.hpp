// Copyright 2026 The conncalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONNCALC_TESTS_SUPPORT_FIXTURES_HPP
#define CONNCALC_TESTS_SUPPORT_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "conncalc/scenario_io.hpp"

namespace conncalc::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CONNCALC_FIXTURE_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(CONNCALC_GOLDEN_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Scenario load_fixture(const std::string& name) {
  ParseResult parsed = parse_scenario(read_text(fixture_path(name)));
  if (!parsed.ok()) {
    std::string why;
    for (const auto& d : parsed.diagnostics) why += d.to_string() + "\n";
    throw std::runtime_error("fixture " + name + " failed to parse:\n" + why);
  }
  return *parsed.scenario;
}

}  // namespace conncalc::testing

#endif  // CONNCALC_TESTS_SUPPORT_FIXTURES_HPP
