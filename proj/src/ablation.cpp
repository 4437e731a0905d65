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

#include "conncalc/ablation.hpp"

#include <algorithm>

#include "conncalc/connectivity.hpp"
#include "conncalc/pathfinding.hpp"

namespace conncalc {

std::string_view to_string(RemovalOrder order) {
  return order == RemovalOrder::least_first ? "least_first" : "most_first";
}

std::optional<RemovalOrder> removal_order_from_string(std::string_view text) {
  if (text == "least_first" || text == "least-first") return RemovalOrder::least_first;
  if (text == "most_first" || text == "most-first") return RemovalOrder::most_first;
  return std::nullopt;
}

Rational importance(const Connection& conn, const Scenario& scenario) {
  return abs(unblocked_value(conn, scenario));
}

std::vector<std::string> removal_schedule(const Scenario& scenario,
                                          RemovalOrder order) {
  struct Ranked {
    Rational weight;
    std::string id;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(scenario.connections.size());
  for (const auto& c : scenario.connections) {
    ranked.push_back({importance(c, scenario), c.id});
  }
  std::sort(ranked.begin(), ranked.end(), [order](const Ranked& a, const Ranked& b) {
    if (a.weight != b.weight) {
      return order == RemovalOrder::least_first ? a.weight < b.weight
                                                : a.weight > b.weight;
    }
    return a.id < b.id;
  });
  std::vector<std::string> out;
  out.reserve(ranked.size());
  for (auto& r : ranked) out.push_back(std::move(r.id));
  return out;
}

QualityTrajectory run_removal(const Scenario& scenario, RemovalOrder order,
                              std::optional<std::size_t> max_steps) {
  QualityTrajectory trajectory;
  trajectory.initial_score = connectivity_score(scenario);
  trajectory.ideal = ideal_connectivity(scenario);
  if (trajectory.ideal == 0) {
    throw DivisionByZeroError("removal run needs a nonzero ideal connectivity");
  }

  Scenario current = scenario;
  Rational score = trajectory.initial_score;
  for (const auto& id : removal_schedule(scenario, order)) {
    if (max_steps && trajectory.steps.size() >= *max_steps) break;
    const Connection* c = current.find_connection(id);
    if (c->blocked) continue;
    current = block(std::move(current), id);
    score = connectivity_score(current);
    trajectory.steps.push_back({trajectory.steps.size() + 1, id, score,
                                quality(score, trajectory.ideal)});
  }
  return trajectory;
}

ReplacementReport run_replacement(const Scenario& scenario,
                                  std::string_view blocked_id,
                                  const Connection& replacement) {
  if (scenario.find_connection(blocked_id) == nullptr) {
    throw IntegrityError("unknown connection '" + std::string(blocked_id) + "'");
  }
  if (scenario.find_connection(replacement.id) != nullptr) {
    throw IntegrityError("replacement id '" + replacement.id +
                         "' collides with an existing connection");
  }
  Rational ideal = ideal_connectivity(scenario);
  if (ideal == 0) {
    throw DivisionByZeroError("replacement run needs a nonzero ideal connectivity");
  }

  ReplacementReport report;
  report.blocked_id = std::string(blocked_id);
  report.replacement_id = replacement.id;
  report.quality_before = quality(connectivity_score(scenario), ideal);

  Scenario blocked = block(scenario, blocked_id);
  report.quality_blocked = quality(connectivity_score(blocked), ideal);

  Scenario replaced = std::move(blocked);
  replaced.connections.push_back(replacement);
  report.quality_after = quality(connectivity_score(replaced), ideal);
  return report;
}

}  // namespace conncalc
