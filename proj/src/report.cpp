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

#include <sstream>

#include <nlohmann/json.hpp>

#include "conncalc/scenario_io.hpp"

namespace conncalc {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string percent(const Rational& value) { return format_rational(value) + "%"; }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string emit_report(const ConnectivityReport& report, ReportFormat format) {
  if (format == ReportFormat::machine) {
    ordered_json doc;
    doc["score"] = format_rational(report.score);
    doc["ideal"] = format_rational(report.ideal);
    doc["efficiency_percent"] = format_rational(report.efficiency_percent);
    doc["band"] = std::string(to_string(report.band));
    doc["mode"] = std::string(to_string(report.mode));
    return dump(doc);
  }
  return "score=" + format_rational(report.score) +
         " ideal=" + format_rational(report.ideal) +
         " efficiency=" + percent(report.efficiency_percent) +
         " band=" + std::string(to_string(report.band)) +
         " mode=" + std::string(to_string(report.mode)) + "\n";
}

std::string emit_report(const ConfusionReport& report, ReportFormat format) {
  std::vector<std::string> causes;
  for (auto c : report.causes) causes.emplace_back(to_string(c));
  if (format == ReportFormat::machine) {
    ordered_json doc;
    doc["z"] = format_rational(report.z);
    doc["quality_percent"] = format_rational(report.quality_percent);
    doc["confused"] = report.confused;
    doc["causes"] = causes;
    return dump(doc);
  }
  return "z=" + format_rational(report.z) +
         " quality=" + percent(report.quality_percent) +
         " confused=" + (report.confused ? "true" : "false") +
         " causes=" + (causes.empty() ? "none" : join(causes, ",")) + "\n";
}

std::string emit_report(const QualityTrajectory& trajectory, ReportFormat format) {
  if (format == ReportFormat::machine) {
    ordered_json doc;
    doc["initial_score"] = format_rational(trajectory.initial_score);
    doc["ideal"] = format_rational(trajectory.ideal);
    ordered_json steps = ordered_json::array();
    for (const auto& s : trajectory.steps) {
      ordered_json row;
      row["step"] = s.step;
      row["blocked_connection"] = s.blocked_connection;
      row["score"] = format_rational(s.score);
      row["efficiency_percent"] = format_rational(s.efficiency_percent);
      steps.push_back(std::move(row));
    }
    doc["steps"] = std::move(steps);
    return dump(doc);
  }
  std::ostringstream os;
  os << "initial score=" << format_rational(trajectory.initial_score)
     << " ideal=" << format_rational(trajectory.ideal) << "\n";
  os << "step\tblocked\tscore\tefficiency\n";
  for (const auto& s : trajectory.steps) {
    os << s.step << "\t" << s.blocked_connection << "\t" << format_rational(s.score)
       << "\t" << percent(s.efficiency_percent) << "\n";
  }
  return os.str();
}

std::string emit_report(const ReplacementReport& report, ReportFormat format) {
  if (format == ReportFormat::machine) {
    ordered_json doc;
    doc["blocked_id"] = report.blocked_id;
    doc["replacement_id"] = report.replacement_id;
    doc["quality_before"] = format_rational(report.quality_before);
    doc["quality_blocked"] = format_rational(report.quality_blocked);
    doc["quality_after"] = format_rational(report.quality_after);
    return dump(doc);
  }
  return "replace " + report.blocked_id + " with " + report.replacement_id +
         ": before=" + percent(report.quality_before) +
         " blocked=" + percent(report.quality_blocked) +
         " after=" + percent(report.quality_after) + "\n";
}

std::string emit_report(const std::vector<Path>& paths, ReportFormat format) {
  if (format == ReportFormat::machine) {
    ordered_json doc = ordered_json::array();
    for (const auto& p : paths) {
      ordered_json item;
      item["entities"] = p.entities;
      item["hops"] = p.hops;
      doc.push_back(std::move(item));
    }
    return dump(doc);
  }
  std::ostringstream os;
  for (const auto& p : paths) {
    os << join(p.entities, " -> ") << "\tvia " << join(p.hops, ",") << "\n";
  }
  if (paths.empty()) os << "no paths\n";
  return os.str();
}

std::string emit_report(const std::vector<ParseDiagnostic>& diagnostics,
                        ReportFormat format) {
  if (format == ReportFormat::machine) {
    ordered_json doc = ordered_json::array();
    for (const auto& d : diagnostics) {
      ordered_json item;
      item["severity"] = d.severity == Severity::error ? "error" : "warning";
      item["location"] = d.location;
      item["message"] = d.message;
      doc.push_back(std::move(item));
    }
    return dump(doc);
  }
  std::string out;
  for (const auto& d : diagnostics) out += d.to_string() + "\n";
  return out;
}

}  // namespace conncalc
