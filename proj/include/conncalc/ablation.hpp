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

#ifndef CONNCALC_ABLATION_HPP
#define CONNCALC_ABLATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conncalc/entity_model.hpp"

namespace conncalc {

enum class RemovalOrder { least_first, most_first };
std::string_view to_string(RemovalOrder order);
std::optional<RemovalOrder> removal_order_from_string(std::string_view text);

struct TrajectoryStep {
  std::size_t step = 0;  // 1-based
  std::string blocked_connection;
  Rational score;
  Rational efficiency_percent;
};

struct QualityTrajectory {
  Rational initial_score;
  Rational ideal;  // frozen denominator for the whole run
  std::vector<TrajectoryStep> steps;
};

struct ReplacementReport {
  Rational quality_before;
  Rational quality_blocked;
  Rational quality_after;
  std::string blocked_id;
  std::string replacement_id;
};

// |value| of the connection in the scenario's mode, blocking ignored.
Rational importance(const Connection& conn, const Scenario& scenario);

// Connection ids by importance, ascending or descending; ties by id.
std::vector<std::string> removal_schedule(const Scenario& scenario,
                                          RemovalOrder order);

// Blocks scheduled connections one per step and records score and
// efficiency after each. Already-blocked connections are skipped. The ideal
// is computed once at the start and reused as the denominator.
QualityTrajectory run_removal(const Scenario& scenario, RemovalOrder order,
                              std::optional<std::size_t> max_steps = std::nullopt);

// Efficiency before, with `blocked_id` blocked, and with `replacement`
// inserted on top. All three share the starting ideal: the replacement
// takes over the roster slot of the connection it replaces.
ReplacementReport run_replacement(const Scenario& scenario,
                                  std::string_view blocked_id,
                                  const Connection& replacement);

}  // namespace conncalc

#endif  // CONNCALC_ABLATION_HPP
