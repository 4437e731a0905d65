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

#include "conncalc/entity_model.hpp"

#include <algorithm>
#include <set>

namespace conncalc {

std::string Violation::to_string() const {
  std::string out = subject;
  if (!field.empty()) out += "." + field;
  return out + ": " + message;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  if (violations.empty()) return "invalid scenario";
  std::string out = violations.front().to_string();
  if (violations.size() > 1) {
    out += " (and " + std::to_string(violations.size() - 1) + " more)";
  }
  return out;
}

bool in_open_unit(const Rational& v) { return v > 0 && v < 1; }

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

ValidationError::ValidationError(std::string subject, std::string field,
                                 std::string message)
    : ValidationError(std::vector<Violation>{
          {std::move(subject), std::move(field), std::move(message)}}) {}

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::known: return "known";
    case EntityKind::hidden: return "hidden";
    case EntityKind::unknown: return "unknown";
  }
  return "known";
}

std::string_view to_string(ConnectionKind kind) {
  switch (kind) {
    case ConnectionKind::real: return "real";
    case ConnectionKind::silent: return "silent";
    case ConnectionKind::self: return "self";
  }
  return "real";
}

std::string_view to_string(ScoringMode mode) {
  return mode == ScoringMode::raw ? "raw" : "impact_weighted";
}

std::optional<EntityKind> entity_kind_from_string(std::string_view text) {
  if (text == "known") return EntityKind::known;
  if (text == "hidden") return EntityKind::hidden;
  if (text == "unknown") return EntityKind::unknown;
  return std::nullopt;
}

std::optional<ConnectionKind> connection_kind_from_string(std::string_view text) {
  if (text == "real") return ConnectionKind::real;
  if (text == "silent") return ConnectionKind::silent;
  if (text == "self") return ConnectionKind::self;
  return std::nullopt;
}

std::optional<ScoringMode> scoring_mode_from_string(std::string_view text) {
  if (text == "raw") return ScoringMode::raw;
  if (text == "impact_weighted") return ScoringMode::impact_weighted;
  return std::nullopt;
}

AttributeVector AttributeVector::make(Rational existence, Rational inner_state,
                                      Rational external_state,
                                      Rational communication_state) {
  AttributeVector out{std::move(existence), std::move(inner_state),
                      std::move(external_state), std::move(communication_state)};
  for (auto [name, value] : out.fields()) {
    if (!in_open_unit(*value)) {
      throw ValidationError("attributes", std::string(name),
                            "attribute out of open interval (0,1): " +
                                format_rational(*value));
    }
  }
  return out;
}

std::vector<std::pair<std::string_view, const Rational*>> AttributeVector::fields()
    const {
  return {{"existence", &existence},
          {"inner_state", &inner_state},
          {"external_state", &external_state},
          {"communication_state", &communication_state}};
}

const Entity* Scenario::find_entity(std::string_view id) const {
  auto it = std::find_if(entities.begin(), entities.end(),
                         [&](const Entity& e) { return e.id == id; });
  return it == entities.end() ? nullptr : &*it;
}

const Connection* Scenario::find_connection(std::string_view id) const {
  auto it = std::find_if(connections.begin(), connections.end(),
                         [&](const Connection& c) { return c.id == id; });
  return it == connections.end() ? nullptr : &*it;
}

Connection* Scenario::find_connection(std::string_view id) {
  auto it = std::find_if(connections.begin(), connections.end(),
                         [&](const Connection& c) { return c.id == id; });
  return it == connections.end() ? nullptr : &*it;
}

Scenario canonicalized(Scenario scenario) {
  std::stable_sort(scenario.entities.begin(), scenario.entities.end(),
                   [](const Entity& a, const Entity& b) { return a.id < b.id; });
  std::stable_sort(
      scenario.connections.begin(), scenario.connections.end(),
      [](const Connection& a, const Connection& b) { return a.id < b.id; });
  return scenario;
}

bool operator==(const Scenario& a, const Scenario& b) {
  if (a.host != b.host || a.mode != b.mode ||
      a.desired_connectivity != b.desired_connectivity ||
      a.ideal_roster != b.ideal_roster) {
    return false;
  }
  Scenario ca = canonicalized(a);
  Scenario cb = canonicalized(b);
  return ca.entities == cb.entities && ca.connections == cb.connections;
}

Entity make_entity(std::string id, EntityKind kind,
                   std::optional<AttributeVector> attributes) {
  if (id.empty()) {
    throw ValidationError("entity", "id", "identifier must be nonempty");
  }
  AttributeVector attrs = attributes.value_or(AttributeVector{});
  try {
    attrs = AttributeVector::make(attrs.existence, attrs.inner_state,
                                  attrs.external_state,
                                  attrs.communication_state);
  } catch (const ValidationError& e) {
    auto v = e.violations();
    for (auto& each : v) each.subject = "entity:" + id;
    throw ValidationError(std::move(v));
  }
  return Entity{std::move(id), kind, std::move(attrs)};
}

Rational impact_factor(const Entity& entity) {
  const auto& a = entity.attributes;
  return (a.existence + a.inner_state + a.external_state +
          a.communication_state) /
         4;
}

Rational unblocked_value(const Connection& conn, const Scenario& scenario) {
  Rational value = conn.magnitude * sign_of(conn.polarity);
  if (scenario.mode == ScoringMode::raw) return value;
  const Entity* src = scenario.find_entity(conn.src);
  const Entity* dst = scenario.find_entity(conn.dst);
  if (src == nullptr || dst == nullptr) {
    throw IntegrityError("connection '" + conn.id + "' references missing entity '" +
                         (src == nullptr ? conn.src : conn.dst) + "'");
  }
  return value * (impact_factor(*src) + impact_factor(*dst)) / 2;
}

Rational connection_value(const Connection& conn, const Scenario& scenario) {
  if (scenario.find_entity(conn.src) == nullptr ||
      scenario.find_entity(conn.dst) == nullptr) {
    throw IntegrityError("connection '" + conn.id + "' references missing entity '" +
                         (scenario.find_entity(conn.src) == nullptr ? conn.src
                                                                    : conn.dst) +
                         "'");
  }
  if (conn.blocked) return Rational(0);
  return unblocked_value(conn, scenario);
}

std::vector<Violation> validate_scenario(const Scenario& scenario) {
  std::vector<Violation> out;
  std::set<std::string, std::less<>> entity_ids;

  for (const auto& e : scenario.entities) {
    std::string subject = "entity:" + e.id;
    if (e.id.empty()) out.push_back({subject, "id", "identifier must be nonempty"});
    if (!entity_ids.insert(e.id).second) {
      out.push_back({subject, "id", "duplicate entity id"});
    }
    for (auto [name, value] : e.attributes.fields()) {
      if (!in_open_unit(*value)) {
        out.push_back({subject, "attributes." + std::string(name),
                       "attribute out of open interval (0,1): " +
                           format_rational(*value)});
      }
    }
  }

  if (scenario.host.empty()) {
    out.push_back({"scenario", "host", "host must be nonempty"});
  } else if (!entity_ids.contains(scenario.host)) {
    out.push_back({"scenario", "host", "host '" + scenario.host + "' is not an entity"});
  }

  std::set<std::string, std::less<>> connection_ids;
  for (const auto& c : scenario.connections) {
    std::string subject = "connection:" + c.id;
    if (c.id.empty()) out.push_back({subject, "id", "identifier must be nonempty"});
    if (!connection_ids.insert(c.id).second) {
      out.push_back({subject, "id", "duplicate connection id"});
    }
    if (!entity_ids.contains(c.src)) {
      out.push_back({subject, "src", "unknown entity '" + c.src + "'"});
    }
    if (!entity_ids.contains(c.dst)) {
      out.push_back({subject, "dst", "unknown entity '" + c.dst + "'"});
    }
    if ((c.kind == ConnectionKind::self) != (c.src == c.dst)) {
      out.push_back({subject, "kind",
                     c.kind == ConnectionKind::self
                         ? "self connection must have src == dst"
                         : "connection with src == dst must have kind self"});
    }
    if (c.polarity != Polarity::positive && c.polarity != Polarity::negative) {
      out.push_back({subject, "polarity", "polarity must be 1 or -1"});
    }
    if (!c.polarity_explicit && c.kind != ConnectionKind::self) {
      out.push_back({subject, "polarity",
                     "polarity may only be omitted on self connections"});
    }
    if (c.magnitude < kMinMagnitude || c.magnitude > kMaxMagnitude) {
      out.push_back({subject, "magnitude",
                     "magnitude " + format_rational(c.magnitude) +
                         " outside [1,10]"});
    }
    if (c.confirmed && c.kind != ConnectionKind::silent) {
      out.push_back({subject, "confirmed",
                     "only silent connections can be confirmed"});
    }
  }

  if (scenario.ideal_roster) {
    for (std::size_t i = 0; i < scenario.ideal_roster->size(); ++i) {
      std::string subject = "ideal_roster:" + std::to_string(i);
      const auto& entry = (*scenario.ideal_roster)[i];
      if (const auto* ref = std::get_if<RosterRef>(&entry)) {
        if (!connection_ids.contains(ref->id)) {
          out.push_back({subject, "ref", "unknown connection '" + ref->id + "'"});
        }
      } else {
        const auto& h = std::get<RosterHypothetical>(entry);
        if (!entity_ids.contains(h.src)) {
          out.push_back({subject, "src", "unknown entity '" + h.src + "'"});
        }
        if (!entity_ids.contains(h.dst)) {
          out.push_back({subject, "dst", "unknown entity '" + h.dst + "'"});
        }
        if (h.magnitude < kMinMagnitude || h.magnitude > kMaxMagnitude) {
          out.push_back({subject, "magnitude",
                         "magnitude " + format_rational(h.magnitude) +
                             " outside [1,10]"});
        }
      }
    }
  }
  return out;
}

void require_valid(const Scenario& scenario) {
  auto violations = validate_scenario(scenario);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace conncalc
