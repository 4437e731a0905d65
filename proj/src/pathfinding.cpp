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

#include "conncalc/pathfinding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace conncalc {

namespace {

struct Arc {
  std::string to;
  std::string via;
};

using Adjacency = std::map<std::string, std::vector<Arc>, std::less<>>;

bool traversable(const Connection& c, bool include_silent) {
  if (c.blocked || c.kind == ConnectionKind::self) return false;
  return c.kind == ConnectionKind::real || include_silent;
}

Adjacency build_adjacency(const Scenario& scenario, bool include_silent) {
  Adjacency adj;
  for (const auto& c : scenario.connections) {
    if (!traversable(c, include_silent)) continue;
    adj[c.src].push_back({c.dst, c.id});
    adj[c.dst].push_back({c.src, c.id});
  }
  for (auto& [_, arcs] : adj) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      return std::tie(a.to, a.via) < std::tie(b.to, b.via);
    });
  }
  return adj;
}

void require_entity(const Scenario& scenario, std::string_view id) {
  if (scenario.find_entity(id) == nullptr) {
    throw IntegrityError("unknown entity '" + std::string(id) + "'");
  }
}

Connection& require_connection(Scenario& scenario, std::string_view id) {
  Connection* c = scenario.find_connection(id);
  if (c == nullptr) {
    throw IntegrityError("unknown connection '" + std::string(id) + "'");
  }
  return *c;
}

std::string fresh_id(const std::set<std::string, std::less<>>& taken,
                     const std::string& src, const std::string& dst) {
  for (std::size_t n = 0;; ++n) {
    std::string id = "sc:" + src + ":" + dst + ":" + std::to_string(n);
    if (!taken.contains(id)) return id;
  }
}

}  // namespace

std::vector<Path> find_paths(const Scenario& scenario, std::string_view src,
                             std::string_view dst, std::size_t max_hops,
                             bool include_silent) {
  require_valid(scenario);
  require_entity(scenario, src);
  require_entity(scenario, dst);
  if (max_hops < 1) {
    throw ValidationError("find_paths", "max_hops", "max_hops must be at least 1");
  }

  std::vector<Path> paths;
  if (src == dst) {
    for (const auto& c : scenario.connections) {
      if (c.kind == ConnectionKind::self && c.src == src && !c.blocked) {
        paths.push_back(Path{{std::string(src)}, {c.id}});
      }
    }
  } else {
    Adjacency adj = build_adjacency(scenario, include_silent);
    Path current{{std::string(src)}, {}};
    std::set<std::string, std::less<>> on_path{std::string(src)};

    // Depth-first over simple paths; depth is bounded by max_hops.
    auto extend = [&](auto&& self) -> void {
      const std::string& at = current.entities.back();
      if (at == dst) {
        paths.push_back(current);
        return;
      }
      if (current.hops.size() >= max_hops) return;
      auto it = adj.find(at);
      if (it == adj.end()) return;
      for (const auto& arc : it->second) {
        if (on_path.contains(arc.to)) continue;
        current.entities.push_back(arc.to);
        current.hops.push_back(arc.via);
        on_path.insert(arc.to);
        self(self);
        on_path.erase(arc.to);
        current.entities.pop_back();
        current.hops.pop_back();
      }
    };
    extend(extend);
  }

  std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    if (a.entities.size() != b.entities.size()) {
      return a.entities.size() < b.entities.size();
    }
    return std::tie(a.entities, a.hops) < std::tie(b.entities, b.hops);
  });
  return paths;
}

bool reachable(const Scenario& scenario, std::string_view a, std::string_view b,
               bool include_silent) {
  require_entity(scenario, a);
  require_entity(scenario, b);
  if (a == b) return true;
  Adjacency adj = build_adjacency(scenario, include_silent);
  std::set<std::string, std::less<>> seen{std::string(a)};
  std::deque<std::string> queue{std::string(a)};
  while (!queue.empty()) {
    std::string at = std::move(queue.front());
    queue.pop_front();
    auto it = adj.find(at);
    if (it == adj.end()) continue;
    for (const auto& arc : it->second) {
      if (arc.to == b) return true;
      if (seen.insert(arc.to).second) queue.push_back(arc.to);
    }
  }
  return false;
}

bool law_holds(const Scenario& scenario) {
  std::set<std::string, std::less<>> has_self;
  std::set<std::pair<std::string, std::string>> linked;
  for (const auto& c : scenario.connections) {
    if (c.src == c.dst) {
      has_self.insert(c.src);
    } else {
      linked.insert(std::minmax(c.src, c.dst));
    }
  }
  for (std::size_t i = 0; i < scenario.entities.size(); ++i) {
    const auto& a = scenario.entities[i].id;
    if (!has_self.contains(a)) return false;
    for (std::size_t j = i + 1; j < scenario.entities.size(); ++j) {
      const auto& b = scenario.entities[j].id;
      if (!linked.contains(std::minmax(a, b))) return false;
    }
  }
  return true;
}

Scenario silent_closure(Scenario scenario) {
  require_valid(scenario);
  std::set<std::string, std::less<>> taken;
  std::set<std::string, std::less<>> has_self;
  std::set<std::pair<std::string, std::string>> linked;
  for (const auto& c : scenario.connections) {
    taken.insert(c.id);
    if (c.src == c.dst) {
      has_self.insert(c.src);
    } else {
      linked.insert(std::minmax(c.src, c.dst));
    }
  }

  std::vector<std::string> ids;
  for (const auto& e : scenario.entities) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());

  auto add = [&](const std::string& src, const std::string& dst, Polarity polarity) {
    Connection c;
    c.id = fresh_id(taken, src, dst);
    c.src = src;
    c.dst = dst;
    c.kind = src == dst ? ConnectionKind::self : ConnectionKind::silent;
    c.polarity = polarity;
    c.magnitude = kMinMagnitude;
    taken.insert(c.id);
    scenario.connections.push_back(std::move(c));
  };

  for (const auto& id : ids) {
    if (!has_self.contains(id)) add(id, id, Polarity::positive);
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!linked.contains({ids[i], ids[j]})) add(ids[i], ids[j], Polarity::negative);
    }
  }
  return scenario;
}

Scenario block(Scenario scenario, std::string_view conn_id) {
  require_connection(scenario, conn_id).blocked = true;
  return scenario;
}

Scenario unblock(Scenario scenario, std::string_view conn_id) {
  require_connection(scenario, conn_id).blocked = false;
  return scenario;
}

Scenario confirm_silent(Scenario scenario, std::string_view conn_id,
                        Polarity observed) {
  Connection& silent = require_connection(scenario, conn_id);
  if (silent.kind != ConnectionKind::silent) {
    throw StateError("connection '" + silent.id + "' is " +
                     std::string(to_string(silent.kind)) +
                     ", only silent connections can be confirmed");
  }
  if (silent.confirmed) {
    throw StateError("connection '" + silent.id + "' is already confirmed");
  }
  std::string real_id = "rc:" + silent.id;
  if (scenario.find_connection(real_id) != nullptr) {
    throw IntegrityError("connection id '" + real_id + "' already exists");
  }
  silent.confirmed = true;
  Connection real;
  real.id = real_id;
  real.src = silent.src;
  real.dst = silent.dst;
  real.kind = ConnectionKind::real;
  real.polarity = observed;
  real.magnitude = silent.magnitude;
  real.time_index = silent.time_index;
  scenario.connections.push_back(std::move(real));
  return scenario;
}

}  // namespace conncalc
