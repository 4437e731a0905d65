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

// conncalc: command-line front end for scenario scoring, path queries,
// silent closure, ablation runs and DOT export.
//
// Exit codes: 0 success, 1 parse/validation failure, 2 computation error,
// 64 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conncalc/ablation.hpp"
#include "conncalc/connectivity.hpp"
#include "conncalc/pathfinding.hpp"
#include "conncalc/scenario_io.hpp"

namespace {

using namespace conncalc;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCompute = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

Scenario load(const std::string& path) {
  ParseResult parsed = parse_scenario(read_file(path));
  for (const auto& d : parsed.diagnostics) std::cerr << path << ": " << d.to_string() << "\n";
  if (!parsed.ok()) throw InputError("'" + path + "' is not a valid scenario");
  return std::move(*parsed.scenario);
}

// BLOCKED,NEW_ID,SRC,DST,POLARITY,MAGNITUDE
std::pair<std::string, Connection> parse_replace_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 6) {
    throw UsageError("--replace expects BLOCKED,NEW_ID,SRC,DST,POLARITY,MAGNITUDE");
  }
  Connection c;
  c.id = parts[1];
  c.src = parts[2];
  c.dst = parts[3];
  c.kind = c.src == c.dst ? ConnectionKind::self : ConnectionKind::real;
  if (parts[4] == "1" || parts[4] == "+1") {
    c.polarity = Polarity::positive;
  } else if (parts[4] == "-1") {
    c.polarity = Polarity::negative;
  } else {
    throw UsageError("--replace polarity must be 1 or -1");
  }
  auto magnitude = parse_rational(parts[5]);
  if (!magnitude) throw UsageError("--replace magnitude must be a decimal number");
  c.magnitude = *magnitude;
  return {parts[0], c};
}

int run(int argc, char** argv) {
  CLI::App app{"conncalc: signed multigraph connectivity calculator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  std::string file;
  std::string output;

  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file");
  validate_cmd->add_option("FILE", file)->required();

  std::string mode_name;
  auto* score_cmd = app.add_subcommand("score", "Connectivity, ideal and efficiency");
  score_cmd->add_option("FILE", file)->required();
  score_cmd->add_option("--mode", mode_name, "Override scoring mode")
      ->check(CLI::IsMember({"raw", "impact", "impact_weighted"}));

  auto* quality_cmd = app.add_subcommand(
      "quality", "Quality against desired_connectivity (or the ideal when unset)");
  quality_cmd->add_option("FILE", file)->required();

  auto* confusion_cmd = app.add_subcommand("confusion", "Confusion detection");
  confusion_cmd->add_option("FILE", file)->required();

  std::string from, to;
  std::size_t max_hops = 0;
  bool include_silent = false;
  auto* paths_cmd = app.add_subcommand("paths", "Enumerate simple paths");
  paths_cmd->add_option("FILE", file)->required();
  paths_cmd->add_option("--from", from)->required();
  paths_cmd->add_option("--to", to)->required();
  paths_cmd->add_option("--max-hops", max_hops, "Default: number of entities - 1")
      ->check(CLI::PositiveNumber);
  paths_cmd->add_flag("--include-silent", include_silent);

  auto* closure_cmd = app.add_subcommand("closure", "Add missing silent connections");
  closure_cmd->add_option("FILE", file)->required();
  closure_cmd->add_option("-o,--output", output);

  std::string order_name;
  std::string replace_spec;
  std::size_t max_steps = 0;
  auto* ablate_cmd = app.add_subcommand("ablate", "Removal / replacement experiments");
  ablate_cmd->add_option("FILE", file)->required();
  ablate_cmd->add_option("--order", order_name)
      ->required()
      ->check(CLI::IsMember({"least-first", "most-first"}));
  auto* max_steps_opt = ablate_cmd->add_option("--max-steps", max_steps);
  ablate_cmd->add_option("--replace", replace_spec,
                         "BLOCKED,NEW_ID,SRC,DST,POLARITY,MAGNITUDE");

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  dot_cmd->add_option("FILE", file)->required();
  dot_cmd->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const ReportFormat format =
      format_name == "json" ? ReportFormat::machine : ReportFormat::table;

  try {
    if (*validate_cmd) {
      ParseResult parsed = parse_scenario(read_file(file));
      if (format == ReportFormat::machine) {
        nlohmann::ordered_json doc;
        doc["valid"] = parsed.ok();
        doc["diagnostics"] =
            nlohmann::ordered_json::parse(emit_report(parsed.diagnostics, format));
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << emit_report(parsed.diagnostics, format);
        if (parsed.ok()) {
          std::cout << "valid: " << parsed.scenario->entities.size() << " entities, "
                    << parsed.scenario->connections.size() << " connections, host "
                    << parsed.scenario->host << "\n";
        }
      }
      return parsed.ok() ? kExitOk : kExitInvalid;
    }

    Scenario scenario = load(file);

    if (*score_cmd) {
      if (mode_name == "raw") scenario.mode = ScoringMode::raw;
      if (mode_name == "impact" || mode_name == "impact_weighted") {
        scenario.mode = ScoringMode::impact_weighted;
      }
      std::cout << emit_report(efficiency(scenario), format);
    } else if (*quality_cmd) {
      Rational score = connectivity_score(scenario);
      Rational desired = scenario.desired_connectivity
                             ? *scenario.desired_connectivity
                             : ideal_connectivity(scenario);
      Rational q = quality(score, desired);
      if (format == ReportFormat::machine) {
        nlohmann::ordered_json doc;
        doc["score"] = format_rational(score);
        doc["desired"] = format_rational(desired);
        doc["quality_percent"] = format_rational(q);
        doc["band"] = std::string(to_string(classify_quality(q)));
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "score=" << format_rational(score)
                  << " desired=" << format_rational(desired)
                  << " quality=" << format_rational(q) << "%"
                  << " band=" << to_string(classify_quality(q)) << "\n";
      }
    } else if (*confusion_cmd) {
      bool host_has_self = false;
      for (const auto& c : scenario.connections) {
        host_has_self |= c.kind == ConnectionKind::self && c.src == scenario.host;
      }
      if (host_has_self) scenario = resolve_self_conflict(std::move(scenario));
      std::cout << emit_report(detect_confusion(scenario), format);
    } else if (*paths_cmd) {
      if (max_hops == 0) max_hops = std::max<std::size_t>(1, scenario.entities.size() - 1);
      std::cout << emit_report(find_paths(scenario, from, to, max_hops, include_silent),
                               format);
    } else if (*closure_cmd) {
      write_output(output, serialize_scenario(silent_closure(std::move(scenario))));
    } else if (*ablate_cmd) {
      RemovalOrder order = *removal_order_from_string(order_name);
      std::optional<std::size_t> steps;
      if (max_steps_opt->count() > 0) steps = max_steps;
      std::optional<std::pair<std::string, Connection>> replacement;
      if (!replace_spec.empty()) replacement = parse_replace_spec(replace_spec);

      QualityTrajectory trajectory = run_removal(scenario, order, steps);
      if (format == ReportFormat::machine) {
        nlohmann::ordered_json doc;
        doc["order"] = std::string(to_string(order));
        doc["trajectory"] = nlohmann::ordered_json::parse(emit_report(trajectory, format));
        if (replacement) {
          doc["replacement"] = nlohmann::ordered_json::parse(emit_report(
              run_replacement(scenario, replacement->first, replacement->second),
              format));
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "order=" << to_string(order) << "\n" << emit_report(trajectory, format);
        if (replacement) {
          std::cout << emit_report(
              run_replacement(scenario, replacement->first, replacement->second),
              format);
        }
      }
    } else if (*dot_cmd) {
      write_output(output, export_dot(scenario));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    for (const auto& v : e.violations()) std::cerr << "invalid: " << v.to_string() << "\n";
    return kExitInvalid;
  } catch (const IntegrityError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
