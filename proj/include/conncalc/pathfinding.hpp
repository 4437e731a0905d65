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

#ifndef CONNCALC_PATHFINDING_HPP
#define CONNCALC_PATHFINDING_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "conncalc/entity_model.hpp"

namespace conncalc {

struct Path {
  std::vector<std::string> entities;
  std::vector<std::string> hops;  // connection ids, one per step

  bool operator==(const Path&) const = default;
};

// All simple paths src -> dst of at most max_hops steps over unblocked
// connections, traversed in either direction. Silent connections are used
// only when include_silent is set. Ordered shorter first, then by entity
// sequence, then by hop ids. For src == dst each unblocked self-connection
// yields the one-entity path [src].
std::vector<Path> find_paths(const Scenario& scenario, std::string_view src,
                             std::string_view dst, std::size_t max_hops,
                             bool include_silent);

// True when an unblocked path of any length joins a and b.
bool reachable(const Scenario& scenario, std::string_view a, std::string_view b,
               bool include_silent);

// Every entity has a self-connection and every unordered pair at least one
// connection of any kind, blocked or not.
bool law_holds(const Scenario& scenario);

// Adds the missing silent connections so that law_holds becomes true:
// self-connections +1 and pair connections -1, both magnitude 1 and
// unconfirmed, with ids "sc:<src>:<dst>:<n>". Existing connections are kept.
Scenario silent_closure(Scenario scenario);

Scenario block(Scenario scenario, std::string_view conn_id);
Scenario unblock(Scenario scenario, std::string_view conn_id);

// Marks a silent connection confirmed and appends the observed real
// counterpart "rc:<conn_id>" with the same endpoints and magnitude.
Scenario confirm_silent(Scenario scenario, std::string_view conn_id,
                        Polarity observed);

}  // namespace conncalc

#endif  // CONNCALC_PATHFINDING_HPP
