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

#ifndef CONNCALC_CONNECTIVITY_HPP
#define CONNCALC_CONNECTIVITY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conncalc/entity_model.hpp"

namespace conncalc {

// Ordered failing < satisfactory < high.
enum class QualityBand { failing = 0, satisfactory = 1, high = 2 };
std::string_view to_string(QualityBand band);

struct ConnectivityReport {
  Rational score;
  Rational ideal;
  Rational efficiency_percent;
  QualityBand band = QualityBand::failing;
  ScoringMode mode = ScoringMode::raw;
};

enum class ConfusionCause { missing_entity_info, missing_path_info, self_conflict };
std::string_view to_string(ConfusionCause cause);

struct ConfusionReport {
  Rational z;
  Rational quality_percent;
  bool confused = false;
  std::vector<ConfusionCause> causes;  // sorted, no duplicates
};

// Sum of connection_value over every connection. Validates first.
Rational connectivity_score(const Scenario& scenario);

// Sum of |value| over the ideal roster with blocking ignored. Without an
// explicit roster every connection in the scenario is counted.
Rational ideal_connectivity(const Scenario& scenario);

// 100 * actual / desired, sign preserved.
Rational quality(const Rational& actual, const Rational& desired);

// < 50 failing, [50, 75] satisfactory, > 75 high.
QualityBand classify_quality(const Rational& percent);

// Score against the ideal. Throws DivisionByZeroError when the ideal is 0.
ConnectivityReport efficiency(const Scenario& scenario);

// Requires desired_connectivity; throws ConfigurationError otherwise.
ConfusionReport detect_confusion(const Scenario& scenario);

// Sets the sign of every host self-connection whose polarity was not
// authored: -1 when its magnitude differs from the mean non-self magnitude,
// +1 otherwise. Authored polarities are kept. Throws StateError when the
// host has no self-connection.
Scenario resolve_self_conflict(Scenario scenario);

// Result of walking a path hop by hop with the strongest unblocked
// connection on each hop.
struct PathDistance {
  // Empty when some hop has no unblocked connection.
  std::optional<Rational> sum;
  // Chosen connection per hop; empty when the path is non-viable.
  std::vector<std::string> hops;

  bool reachable() const { return sum.has_value(); }
  // The interaction is viable only when the sum is strictly positive.
  bool positive() const { return sum && *sum > 0; }
};

PathDistance distance_sum(const Scenario& scenario,
                          const std::vector<std::string>& path);

// Product of impact factors of every path entity after the first; 0 when a
// hop has no unblocked connection. Always < 1.
Rational path_viability(const Scenario& scenario,
                        const std::vector<std::string>& path);

}  // namespace conncalc

#endif  // CONNCALC_CONNECTIVITY_HPP
