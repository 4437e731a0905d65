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

#include <algorithm>
#include <sstream>

#include "conncalc/scenario_io.hpp"

namespace conncalc {

namespace {

std::string dot_id(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Node style by entity kind.
std::string_view node_style(EntityKind kind) {
  switch (kind) {
    case EntityKind::known: return "solid";
    case EntityKind::hidden: return "dashed";
    case EntityKind::unknown: return "dotted";
  }
  return "solid";
}

}  // namespace

std::string export_dot(const Scenario& input) {
  Scenario s = canonicalized(input);
  std::ostringstream os;
  os << "digraph scenario {\n";
  os << "  node [shape=ellipse];\n";
  for (const auto& e : s.entities) {
    os << "  " << dot_id(e.id) << " [label=" << dot_id(e.id)
       << ", style=" << node_style(e.kind);
    if (e.id == s.host) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& c : s.connections) {
    os << "  " << dot_id(c.src) << " -> " << dot_id(c.dst) << " [id=" << dot_id(c.id)
       << ", label=" << dot_id(format_signed(unblocked_value(c, s)))
       << ", style=" << (c.kind == ConnectionKind::real ? "solid" : "dashed");
    if (c.blocked) os << ", color=gray50, fontcolor=gray50, arrowhead=tee";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace conncalc
