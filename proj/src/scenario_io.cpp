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

#include "conncalc/scenario_io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace conncalc {

using nlohmann::json;
using nlohmann::ordered_json;

std::string ParseDiagnostic::to_string() const {
  return std::string(severity == Severity::error ? "error" : "warning") + " " +
         location + ": " + message;
}

namespace {

const std::set<std::string, std::less<>> kRootKeys = {
    "version", "host",        "mode",        "desired_connectivity",
    "entities", "connections", "ideal_roster"};
const std::set<std::string, std::less<>> kEntityKeys = {"id", "kind", "attributes"};
const std::set<std::string, std::less<>> kAttributeKeys = {
    "existence", "inner_state", "external_state", "communication_state"};
const std::set<std::string, std::less<>> kConnectionKeys = {
    "id",        "src",       "dst",     "kind",     "polarity",
    "magnitude", "time_index", "blocked", "confirmed"};
const std::set<std::string, std::less<>> kHypotheticalKeys = {"src", "dst",
                                                              "magnitude"};

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

class Reader {
 public:
  std::vector<ParseDiagnostic> diagnostics;

  void error(std::string location, std::string message) {
    diagnostics.push_back({Severity::error, std::move(location), std::move(message)});
  }
  void warning(std::string location, std::string message) {
    diagnostics.push_back({Severity::warning, std::move(location), std::move(message)});
  }
  bool failed() const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const auto& d) { return d.severity == Severity::error; });
  }

  void check_keys(const json& object, const std::set<std::string, std::less<>>& known,
                  const std::string& at) {
    for (const auto& [key, _] : object.items()) {
      if (!known.contains(key)) warning(at + "/" + key, "unknown field '" + key + "' ignored");
    }
  }

  bool require_object(const json& value, const std::string& at) {
    if (value.is_object()) return true;
    error(at, "expected an object");
    return false;
  }

  std::optional<std::string> string_field(const json& object, std::string_view key,
                                          const std::string& at, bool required) {
    auto it = object.find(key);
    if (it == object.end()) {
      if (required) error(at + "/" + std::string(key), "missing required field");
      return std::nullopt;
    }
    if (!it->is_string()) {
      error(at + "/" + std::string(key), "expected a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

  std::optional<Rational> rational_field(const json& object, std::string_view key,
                                         const std::string& at, bool required) {
    auto it = object.find(key);
    std::string where = at + "/" + std::string(key);
    if (it == object.end()) {
      if (required) error(where, "missing required field");
      return std::nullopt;
    }
    if (!it->is_string()) {
      error(where, "expected a decimal string such as \"7\" or \"0.75\"");
      return std::nullopt;
    }
    auto value = parse_rational(it->get_ref<const std::string&>());
    if (!value) error(where, "not a decimal number: \"" + it->get<std::string>() + "\"");
    return value;
  }

  std::optional<bool> bool_field(const json& object, std::string_view key,
                                 const std::string& at) {
    auto it = object.find(key);
    if (it == object.end()) return std::nullopt;
    if (!it->is_boolean()) {
      error(at + "/" + std::string(key), "expected true or false");
      return std::nullopt;
    }
    return it->get<bool>();
  }
};

std::optional<Entity> read_entity(Reader& r, const json& node, const std::string& at) {
  if (!r.require_object(node, at)) return std::nullopt;
  r.check_keys(node, kEntityKeys, at);
  Entity e;
  auto id = r.string_field(node, "id", at, true);
  auto kind_text = r.string_field(node, "kind", at, true);
  if (id) e.id = *id;
  if (kind_text) {
    if (auto kind = entity_kind_from_string(*kind_text)) {
      e.kind = *kind;
    } else {
      r.error(at + "/kind", "kind must be known, hidden or unknown");
    }
  }
  if (auto it = node.find("attributes"); it != node.end()) {
    std::string where = at + "/attributes";
    if (r.require_object(*it, where)) {
      r.check_keys(*it, kAttributeKeys, where);
      auto set = [&](std::string_view key, Rational& slot) {
        if (auto v = r.rational_field(*it, key, where, false)) slot = *v;
      };
      set("existence", e.attributes.existence);
      set("inner_state", e.attributes.inner_state);
      set("external_state", e.attributes.external_state);
      set("communication_state", e.attributes.communication_state);
    }
  }
  return e;
}

std::optional<Connection> read_connection(Reader& r, const json& node,
                                          const std::string& at) {
  if (!r.require_object(node, at)) return std::nullopt;
  r.check_keys(node, kConnectionKeys, at);
  Connection c;
  if (auto v = r.string_field(node, "id", at, true)) c.id = *v;
  if (auto v = r.string_field(node, "src", at, true)) c.src = *v;
  if (auto v = r.string_field(node, "dst", at, true)) c.dst = *v;
  if (auto v = r.string_field(node, "kind", at, true)) {
    if (auto kind = connection_kind_from_string(*v)) {
      c.kind = *kind;
    } else {
      r.error(at + "/kind", "kind must be real, silent or self");
    }
  }
  if (auto it = node.find("polarity"); it != node.end()) {
    if (it->is_number_integer() && (*it == 1 || *it == -1)) {
      c.polarity = *it == 1 ? Polarity::positive : Polarity::negative;
    } else {
      r.error(at + "/polarity", "polarity must be the integer 1 or -1");
    }
  } else if (c.kind == ConnectionKind::self) {
    c.polarity_explicit = false;
  } else {
    r.error(at + "/polarity", "missing required field");
  }
  if (auto v = r.rational_field(node, "magnitude", at, true)) c.magnitude = *v;
  if (auto it = node.find("time_index"); it != node.end()) {
    if (it->is_number_unsigned()) {
      c.time_index = it->get<std::uint64_t>();
    } else {
      r.error(at + "/time_index", "time_index must be a non-negative integer");
    }
  }
  if (auto v = r.bool_field(node, "blocked", at)) c.blocked = *v;
  if (auto v = r.bool_field(node, "confirmed", at)) c.confirmed = *v;
  return c;
}

std::optional<RosterEntry> read_roster_entry(Reader& r, const json& node,
                                             const std::string& at) {
  if (!r.require_object(node, at)) return std::nullopt;
  bool has_ref = node.contains("ref");
  bool has_hyp = node.contains("hypothetical");
  if (has_ref == has_hyp) {
    r.error(at, "roster entry needs exactly one of 'ref' or 'hypothetical'");
    return std::nullopt;
  }
  for (const auto& [key, _] : node.items()) {
    if (key != "ref" && key != "hypothetical") {
      r.warning(at + "/" + key, "unknown field '" + key + "' ignored");
    }
  }
  if (has_ref) {
    auto id = r.string_field(node, "ref", at, true);
    if (!id) return std::nullopt;
    return RosterRef{*id};
  }
  std::string where = at + "/hypothetical";
  const json& h = node["hypothetical"];
  if (!r.require_object(h, where)) return std::nullopt;
  r.check_keys(h, kHypotheticalKeys, where);
  RosterHypothetical out;
  auto src = r.string_field(h, "src", where, true);
  auto dst = r.string_field(h, "dst", where, true);
  auto magnitude = r.rational_field(h, "magnitude", where, true);
  if (!src || !dst || !magnitude) return std::nullopt;
  out.src = *src;
  out.dst = *dst;
  out.magnitude = *magnitude;
  return out;
}

// Turns validator output into located diagnostics.
std::string locate(const Violation& v, const json& root) {
  auto index_of = [&](const char* array, const std::string& id, bool last) {
    std::optional<std::size_t> found;
    if (auto it = root.find(array); it != root.end() && it->is_array()) {
      for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& item = (*it)[i];
        if (item.is_object() && item.contains("id") && item["id"].is_string() &&
            item["id"].get_ref<const std::string&>() == id) {
          found = i;
          if (!last) break;
        }
      }
    }
    return found;
  };
  auto pointer_field = [](std::string field) {
    std::replace(field.begin(), field.end(), '.', '/');
    return field.empty() ? std::string() : "/" + field;
  };
  bool duplicate = v.message.rfind("duplicate", 0) == 0;
  if (v.subject.rfind("entity:", 0) == 0) {
    if (auto i = index_of("entities", v.subject.substr(7), duplicate)) {
      return "/entities/" + std::to_string(*i) + pointer_field(v.field);
    }
  } else if (v.subject.rfind("connection:", 0) == 0) {
    if (auto i = index_of("connections", v.subject.substr(11), duplicate)) {
      return "/connections/" + std::to_string(*i) + pointer_field(v.field);
    }
  } else if (v.subject.rfind("ideal_roster:", 0) == 0) {
    std::string base = "/ideal_roster/" + v.subject.substr(13);
    return base + (v.field == "ref" ? "/ref" : "/hypothetical" + pointer_field(v.field));
  } else if (v.subject == "scenario") {
    return pointer_field(v.field);
  }
  return "/";
}

ordered_json attributes_json(const AttributeVector& a) {
  ordered_json out;
  for (auto [name, value] : a.fields()) out[std::string(name)] = format_rational(*value);
  return out;
}

}  // namespace

ParseResult parse_scenario(std::string_view text) {
  Reader r;
  ParseResult result;
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    r.error(line_column(text, e.byte), "syntax error: " + std::string(e.what()));
    result.diagnostics = std::move(r.diagnostics);
    return result;
  }
  if (!root.is_object()) {
    r.error("/", "scenario document must be a JSON object");
    result.diagnostics = std::move(r.diagnostics);
    return result;
  }
  r.check_keys(root, kRootKeys, "");

  Scenario s;
  if (auto it = root.find("version"); it == root.end()) {
    r.error("/version", "missing required field");
  } else if (!it->is_number_integer() || *it != 1) {
    r.error("/version", "unsupported version; expected 1");
  }
  if (auto host = r.string_field(root, "host", "", true)) s.host = *host;
  if (auto mode = r.string_field(root, "mode", "", false)) {
    if (auto m = scoring_mode_from_string(*mode)) {
      s.mode = *m;
    } else {
      r.error("/mode", "mode must be raw or impact_weighted");
    }
  }
  s.desired_connectivity = r.rational_field(root, "desired_connectivity", "", false);

  if (auto it = root.find("entities"); it == root.end()) {
    r.error("/entities", "missing required field");
  } else if (!it->is_array()) {
    r.error("/entities", "expected an array");
  } else {
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (auto e = read_entity(r, (*it)[i], "/entities/" + std::to_string(i))) {
        s.entities.push_back(std::move(*e));
      }
    }
  }

  if (auto it = root.find("connections"); it != root.end()) {
    if (!it->is_array()) {
      r.error("/connections", "expected an array");
    } else {
      for (std::size_t i = 0; i < it->size(); ++i) {
        if (auto c = read_connection(r, (*it)[i], "/connections/" + std::to_string(i))) {
          s.connections.push_back(std::move(*c));
        }
      }
    }
  }

  if (auto it = root.find("ideal_roster"); it != root.end()) {
    if (!it->is_array()) {
      r.error("/ideal_roster", "expected an array");
    } else {
      std::vector<RosterEntry> roster;
      for (std::size_t i = 0; i < it->size(); ++i) {
        if (auto e = read_roster_entry(r, (*it)[i], "/ideal_roster/" + std::to_string(i))) {
          roster.push_back(std::move(*e));
        }
      }
      s.ideal_roster = std::move(roster);
    }
  }

  if (!r.failed()) {
    for (const auto& v : validate_scenario(s)) r.error(locate(v, root), v.to_string());
  }
  if (!r.failed()) result.scenario = std::move(s);
  result.diagnostics = std::move(r.diagnostics);
  return result;
}

std::string serialize_scenario(const Scenario& input) {
  Scenario s = canonicalized(input);
  ordered_json doc;
  doc["version"] = 1;
  doc["host"] = s.host;
  doc["mode"] = std::string(to_string(s.mode));
  if (s.desired_connectivity) {
    doc["desired_connectivity"] = format_rational(*s.desired_connectivity);
  }

  ordered_json entities = ordered_json::array();
  for (const auto& e : s.entities) {
    ordered_json item;
    item["id"] = e.id;
    item["kind"] = std::string(to_string(e.kind));
    if (e.attributes != AttributeVector{}) item["attributes"] = attributes_json(e.attributes);
    entities.push_back(std::move(item));
  }
  doc["entities"] = std::move(entities);

  ordered_json connections = ordered_json::array();
  for (const auto& c : s.connections) {
    ordered_json item;
    item["id"] = c.id;
    item["src"] = c.src;
    item["dst"] = c.dst;
    item["kind"] = std::string(to_string(c.kind));
    if (c.polarity_explicit) item["polarity"] = sign_of(c.polarity);
    item["magnitude"] = format_rational(c.magnitude);
    if (c.time_index != 0) item["time_index"] = c.time_index;
    if (c.blocked) item["blocked"] = true;
    if (c.confirmed) item["confirmed"] = true;
    connections.push_back(std::move(item));
  }
  doc["connections"] = std::move(connections);

  if (s.ideal_roster) {
    ordered_json roster = ordered_json::array();
    for (const auto& entry : *s.ideal_roster) {
      ordered_json item;
      if (const auto* ref = std::get_if<RosterRef>(&entry)) {
        item["ref"] = ref->id;
      } else {
        const auto& h = std::get<RosterHypothetical>(entry);
        ordered_json hyp;
        hyp["src"] = h.src;
        hyp["dst"] = h.dst;
        hyp["magnitude"] = format_rational(h.magnitude);
        item["hypothetical"] = std::move(hyp);
      }
      roster.push_back(std::move(item));
    }
    doc["ideal_roster"] = std::move(roster);
  }
  return doc.dump(2) + "\n";
}

}  // namespace conncalc
