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

#ifndef CONNCALC_SCENARIO_IO_HPP
#define CONNCALC_SCENARIO_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conncalc/ablation.hpp"
#include "conncalc/connectivity.hpp"
#include "conncalc/entity_model.hpp"
#include "conncalc/pathfinding.hpp"

namespace conncalc {

enum class Severity { error, warning };

struct ParseDiagnostic {
  Severity severity = Severity::error;
  // "line:column" for syntax errors, a JSON pointer such as
  // "/connections/2/magnitude" for field errors.
  std::string location;
  std::string message;

  std::string to_string() const;
};

struct ParseResult {
  std::optional<Scenario> scenario;  // set iff there are no error diagnostics
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return scenario.has_value(); }
};

// Reads a version-1 scenario document. Numbers that must be exact (magnitude,
// attributes, desired_connectivity, hypothetical magnitudes) are decimal or
// fraction strings. Unknown keys produce warnings.
ParseResult parse_scenario(std::string_view text);

// Canonical text: two-space indented JSON, entities and connections sorted by
// id, keys in a fixed order, default-valued optional keys omitted, trailing
// newline.
std::string serialize_scenario(const Scenario& scenario);

// Graphviz digraph. Real edges solid, silent and self edges dashed, blocked
// edges grey with a tee arrowhead; the host is a double circle.
std::string export_dot(const Scenario& scenario);

enum class ReportFormat { table, machine };

std::string emit_report(const ConnectivityReport& report, ReportFormat format);
std::string emit_report(const ConfusionReport& report, ReportFormat format);
std::string emit_report(const QualityTrajectory& trajectory, ReportFormat format);
std::string emit_report(const ReplacementReport& report, ReportFormat format);
std::string emit_report(const std::vector<Path>& paths, ReportFormat format);
std::string emit_report(const std::vector<ParseDiagnostic>& diagnostics,
                        ReportFormat format);

}  // namespace conncalc

#endif  // CONNCALC_SCENARIO_IO_HPP
