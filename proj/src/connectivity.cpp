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

#include "conncalc/connectivity.hpp"

#include <algorithm>
#include <set>

#include "conncalc/pathfinding.hpp"

namespace conncalc {

std::string_view to_string(QualityBand band) {
  switch (band) {
    case QualityBand::failing: return "failing";
    case QualityBand::satisfactory: return "satisfactory";
    case QualityBand::high: return "high";
  }
  return "failing";
}

std::string_view to_string(ConfusionCause cause) {
  switch (cause) {
    case ConfusionCause::missing_entity_info: return "missing_entity_info";
    case ConfusionCause::missing_path_info: return "missing_path_info";
    case ConfusionCause::self_conflict: return "self_conflict";
  }
  return "self_conflict";
}

Rational connectivity_score(const Scenario& scenario) {
  require_valid(scenario);
  Rational total = 0;
  for (const auto& c : scenario.connections) total += connection_value(c, scenario);
  return total;
}

namespace {

Rational hypothetical_value(const RosterHypothetical& h, const Scenario& scenario) {
  Connection probe;
  probe.id = "hypothetical:" + h.src + ":" + h.dst;
  probe.src = h.src;
  probe.dst = h.dst;
  probe.kind = h.src == h.dst ? ConnectionKind::self : ConnectionKind::real;
  probe.magnitude = h.magnitude;
  return unblocked_value(probe, scenario);
}

}  // namespace

Rational ideal_connectivity(const Scenario& scenario) {
  require_valid(scenario);
  Rational total = 0;
  if (!scenario.ideal_roster) {
    for (const auto& c : scenario.connections) total += abs(unblocked_value(c, scenario));
    return total;
  }
  for (const auto& entry : *scenario.ideal_roster) {
    if (const auto* ref = std::get_if<RosterRef>(&entry)) {
      const Connection* c = scenario.find_connection(ref->id);
      if (c == nullptr) {
        throw IntegrityError("ideal roster references unknown connection '" +
                             ref->id + "'");
      }
      total += abs(unblocked_value(*c, scenario));
    } else {
      total += abs(hypothetical_value(std::get<RosterHypothetical>(entry), scenario));
    }
  }
  return total;
}

Rational quality(const Rational& actual, const Rational& desired) {
  if (desired == 0) {
    throw DivisionByZeroError(
        "quality is undefined: desired connectivity is 0 (nothing to measure "
        "against)");
  }
  return actual * 100 / desired;
}

QualityBand classify_quality(const Rational& percent) {
  if (percent < 50) return QualityBand::failing;
  if (percent <= 75) return QualityBand::satisfactory;
  return QualityBand::high;
}

ConnectivityReport efficiency(const Scenario& scenario) {
  ConnectivityReport report;
  report.score = connectivity_score(scenario);
  report.ideal = ideal_connectivity(scenario);
  if (report.ideal == 0) {
    throw DivisionByZeroError("efficiency is undefined: ideal connectivity is 0");
  }
  report.efficiency_percent = quality(report.score, report.ideal);
  report.band = classify_quality(report.efficiency_percent);
  report.mode = scenario.mode;
  return report;
}

ConfusionReport detect_confusion(const Scenario& scenario) {
  if (!scenario.desired_connectivity) {
    throw ConfigurationError(
        "confusion detection needs desired_connectivity in the scenario");
  }
  ConfusionReport report;
  report.z = connectivity_score(scenario);
  report.quality_percent = quality(report.z, *scenario.desired_connectivity);
  report.confused = !(report.z > 0 && report.quality_percent > 50);

  std::set<ConfusionCause> causes;
  for (const auto& c : scenario.connections) {
    for (const auto* id : {&c.src, &c.dst}) {
      const Entity* e = scenario.find_entity(*id);
      if (e->kind == EntityKind::hidden || e->kind == EntityKind::unknown) {
        causes.insert(ConfusionCause::missing_entity_info);
      }
    }
    if (c.kind != ConnectionKind::self &&
        !reachable(scenario, c.src, c.dst, /*include_silent=*/false)) {
      causes.insert(ConfusionCause::missing_path_info);
    }
  }
  for (const auto& self : scenario.connections) {
    if (self.kind != ConnectionKind::self) continue;
    for (const auto& other : scenario.connections) {
      if (other.kind != ConnectionKind::self && other.magnitude != self.magnitude) {
        causes.insert(ConfusionCause::self_conflict);
        break;
      }
    }
  }
  report.causes.assign(causes.begin(), causes.end());
  return report;
}

Scenario resolve_self_conflict(Scenario scenario) {
  bool any = false;
  Rational magnitude_sum = 0;
  std::size_t non_self = 0;
  for (const auto& c : scenario.connections) {
    if (c.kind == ConnectionKind::self) {
      any = any || c.src == scenario.host;
    } else {
      magnitude_sum += c.magnitude;
      ++non_self;
    }
  }
  if (!any) {
    throw StateError("host '" + scenario.host +
                     "' has no self-connection; use silent_closure to add one");
  }
  for (auto& c : scenario.connections) {
    if (c.kind != ConnectionKind::self || c.src != scenario.host) continue;
    if (c.polarity_explicit) continue;
    bool conflict = non_self > 0 && c.magnitude != magnitude_sum / non_self;
    c.polarity = conflict ? Polarity::negative : Polarity::positive;
    c.polarity_explicit = true;
  }
  return scenario;
}

namespace {

void require_path(const Scenario& scenario, const std::vector<std::string>& path) {
  require_valid(scenario);
  if (path.size() < 2) {
    throw ValidationError("path", "entities", "path needs at least two entities");
  }
  for (const auto& id : path) {
    if (scenario.find_entity(id) == nullptr) {
      throw IntegrityError("path references unknown entity '" + id + "'");
    }
  }
}

// Strongest unblocked connection joining a and b, ties to the smaller id.
const Connection* strongest_link(const Scenario& scenario, const std::string& a,
                                 const std::string& b, Rational* value) {
  const Connection* best = nullptr;
  for (const auto& c : scenario.connections) {
    if (c.blocked) continue;
    bool joins = (c.src == a && c.dst == b) || (c.src == b && c.dst == a);
    if (!joins) continue;
    Rational v = connection_value(c, scenario);
    if (best == nullptr || v > *value || (v == *value && c.id < best->id)) {
      best = &c;
      *value = v;
    }
  }
  return best;
}

}  // namespace

PathDistance distance_sum(const Scenario& scenario,
                          const std::vector<std::string>& path) {
  require_path(scenario, path);
  PathDistance out;
  Rational total = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    Rational value;
    const Connection* link = strongest_link(scenario, path[i - 1], path[i], &value);
    if (link == nullptr) return PathDistance{};
    total += value;
    out.hops.push_back(link->id);
  }
  out.sum = total;
  return out;
}

Rational path_viability(const Scenario& scenario,
                        const std::vector<std::string>& path) {
  require_path(scenario, path);
  Rational product = 1;
  for (std::size_t i = 1; i < path.size(); ++i) {
    Rational unused;
    if (strongest_link(scenario, path[i - 1], path[i], &unused) == nullptr) {
      return Rational(0);
    }
    product *= impact_factor(*scenario.find_entity(path[i]));
  }
  return product;
}

}  // namespace conncalc
