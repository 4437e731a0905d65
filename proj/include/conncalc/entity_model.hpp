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

#ifndef CONNCALC_ENTITY_MODEL_HPP
#define CONNCALC_ENTITY_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conncalc/errors.hpp"
#include "conncalc/rational.hpp"

namespace conncalc {

enum class EntityKind { known, hidden, unknown };
enum class ConnectionKind { real, silent, self };
enum class Polarity : int { negative = -1, positive = 1 };
enum class ScoringMode { raw, impact_weighted };

std::string_view to_string(EntityKind kind);
std::string_view to_string(ConnectionKind kind);
std::string_view to_string(ScoringMode mode);
std::optional<EntityKind> entity_kind_from_string(std::string_view text);
std::optional<ConnectionKind> connection_kind_from_string(std::string_view text);
std::optional<ScoringMode> scoring_mode_from_string(std::string_view text);

inline int sign_of(Polarity p) { return static_cast<int>(p); }
inline Polarity flipped(Polarity p) {
  return p == Polarity::positive ? Polarity::negative : Polarity::positive;
}

// Lower and upper bounds of a connection magnitude, inclusive.
inline const Rational kMinMagnitude{1};
inline const Rational kMaxMagnitude{10};

// Four entity attributes, each strictly inside (0, 1).
struct AttributeVector {
  Rational existence{3, 4};
  Rational inner_state{3, 4};
  Rational external_state{3, 4};
  Rational communication_state{3, 4};

  // Throws ValidationError naming the first field outside (0, 1).
  static AttributeVector make(Rational existence, Rational inner_state,
                              Rational external_state,
                              Rational communication_state);

  // Field names paired with values, in declaration order.
  std::vector<std::pair<std::string_view, const Rational*>> fields() const;

  bool operator==(const AttributeVector&) const = default;
};

struct Entity {
  std::string id;
  EntityKind kind = EntityKind::known;
  AttributeVector attributes;

  bool operator==(const Entity&) const = default;
};

struct Connection {
  std::string id;
  std::string src;
  std::string dst;
  ConnectionKind kind = ConnectionKind::real;
  Polarity polarity = Polarity::positive;
  // False only for self-connections whose sign is left to
  // resolve_self_conflict. Real and silent connections always carry one.
  bool polarity_explicit = true;
  Rational magnitude{1};
  std::uint64_t time_index = 0;
  bool blocked = false;
  bool confirmed = false;

  bool operator==(const Connection&) const = default;
};

// Ideal-roster entry naming an existing connection.
struct RosterRef {
  std::string id;
  bool operator==(const RosterRef&) const = default;
};

// Ideal-roster entry for a connection that would exist in the ideal case.
struct RosterHypothetical {
  std::string src;
  std::string dst;
  Rational magnitude{1};
  bool operator==(const RosterHypothetical&) const = default;
};

using RosterEntry = std::variant<RosterRef, RosterHypothetical>;

// A host-scoped multigraph. The connection list is everything affecting the
// host; scoring sums all of it, incident to the host or not.
struct Scenario {
  std::vector<Entity> entities;
  std::vector<Connection> connections;
  std::string host;
  std::optional<std::vector<RosterEntry>> ideal_roster;
  ScoringMode mode = ScoringMode::raw;
  std::optional<Rational> desired_connectivity;

  const Entity* find_entity(std::string_view id) const;
  const Connection* find_connection(std::string_view id) const;
  Connection* find_connection(std::string_view id);

  // Value equality: entities and connections compare as sets keyed by id,
  // the roster compares in order.
  friend bool operator==(const Scenario& a, const Scenario& b);
};

// Copy of `scenario` with entities and connections sorted by id.
Scenario canonicalized(Scenario scenario);

// Omitted attributes default every field to 0.75. Throws ValidationError on
// an empty id.
Entity make_entity(std::string id, EntityKind kind,
                   std::optional<AttributeVector> attributes = std::nullopt);

// Mean of the four attributes.
Rational impact_factor(const Entity& entity);

// Signed contribution of one connection. Blocked connections give 0. In
// impact_weighted mode the raw value is scaled by the mean of both endpoint
// impact factors. Throws IntegrityError when an endpoint is missing.
Rational connection_value(const Connection& conn, const Scenario& scenario);

// Same as connection_value with the blocked flag ignored.
Rational unblocked_value(const Connection& conn, const Scenario& scenario);

// Every invariant breach in the scenario. Empty means valid.
std::vector<Violation> validate_scenario(const Scenario& scenario);

// Throws ValidationError if validate_scenario reports anything.
void require_valid(const Scenario& scenario);

}  // namespace conncalc

#endif  // CONNCALC_ENTITY_MODEL_HPP
