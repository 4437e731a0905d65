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

#include <random>

#include "gtest/gtest.h"
#include "conncalc/connectivity.hpp"
#include "conncalc/scenario_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_scenario.hpp"

namespace conncalc {
namespace {

using testing::load_fixture;

Scenario isolated_pair() {
  Scenario s;
  s.entities = {make_entity("A", EntityKind::known), make_entity("B", EntityKind::known)};
  s.host = "A";
  return s;
}

Connection edge(std::string id, std::string src, std::string dst,
                ConnectionKind kind = ConnectionKind::real) {
  Connection c;
  c.id = std::move(id);
  c.src = std::move(src);
  c.dst = std::move(dst);
  c.kind = kind;
  c.magnitude = 2;
  return c;
}

TEST(FindPathsTest, OfficeEaToEcGoesThroughEb) {
  auto paths = find_paths(load_fixture("office_v1.json"), "Ea", "Ec", 3, false);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].entities, (std::vector<std::string>{"Ea", "Eb", "Ec"}));
  EXPECT_EQ(paths[0].hops, (std::vector<std::string>{"ea-eb", "ec-eb"}));
}

TEST(FindPathsTest, SilentConnectionsOnlyOnRequest) {
  auto paths = find_paths(load_fixture("office_v1.json"), "Ea", "Ec", 3, true);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].entities, (std::vector<std::string>{"Ea", "Ec"}));
  EXPECT_EQ(paths[0].hops, (std::vector<std::string>{"ec-ea"}));
  EXPECT_EQ(paths[1].entities, (std::vector<std::string>{"Ea", "Eb", "Ec"}));
}

TEST(FindPathsTest, SelfPath) {
  auto paths = find_paths(load_fixture("office_v1.json"), "Eb", "Eb", 1, false);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].entities, std::vector<std::string>{"Eb"});
  EXPECT_TRUE(find_paths(load_fixture("office_v1.json"), "Ea", "Ea", 2, true).empty());
}

TEST(FindPathsTest, IsolatedEntitiesHaveNoPath) {
  EXPECT_TRUE(find_paths(isolated_pair(), "A", "B", 5, false).empty());
}

TEST(FindPathsTest, ParallelConnectionsGiveDistinctPaths) {
  Scenario s = isolated_pair();
  s.connections = {edge("x2", "A", "B"), edge("x1", "B", "A")};
  auto paths = find_paths(s, "A", "B", 1, false);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].hops, std::vector<std::string>{"x1"});
  EXPECT_EQ(paths[1].hops, std::vector<std::string>{"x2"});
}

TEST(FindPathsTest, HopBoundAndBlocking) {
  Scenario s = isolated_pair();
  s.entities.push_back(make_entity("C", EntityKind::known));
  s.connections = {edge("ac", "A", "C"), edge("cb", "C", "B")};
  EXPECT_TRUE(find_paths(s, "A", "B", 1, false).empty());
  EXPECT_EQ(find_paths(s, "A", "B", 2, false).size(), 1u);
  EXPECT_TRUE(find_paths(block(s, "cb"), "A", "B", 2, false).empty());
}

TEST(FindPathsTest, Errors) {
  Scenario office = load_fixture("office_v1.json");
  EXPECT_THROW(find_paths(office, "Ea", "Nope", 2, false), IntegrityError);
  EXPECT_THROW(find_paths(office, "Ea", "Eb", 0, false), ValidationError);
}

TEST(FindPathsTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 150; ++round) {
    Scenario s = testing::random_scenario(rng, {.max_entities = 6, .max_connections = 10});
    for (bool silent : {false, true}) {
      const auto& a = s.entities.front().id;
      const auto& b = s.entities.back().id;
      if (a == b) continue;
      for (std::size_t hops : {1u, 2u, 5u}) {
        auto got = find_paths(s, a, b, hops, silent);
        auto expected = testing::oracle_paths(s, a, b, hops, silent);
        ASSERT_EQ(got.size(), expected.size());
        // Shorter first, then lexicographic.
        for (std::size_t i = 1; i < got.size(); ++i) {
          EXPECT_LE(got[i - 1].entities.size(), got[i].entities.size());
        }
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> flat;
        for (const auto& p : got) {
          for (const auto& h : p.hops) {
            const Connection* c = s.find_connection(h);
            EXPECT_FALSE(c->blocked);
            EXPECT_TRUE(silent || c->kind == ConnectionKind::real);
          }
          flat.emplace_back(p.entities, p.hops);
        }
        std::sort(flat.begin(), flat.end());
        EXPECT_EQ(flat, expected);
      }
    }
  }
}

TEST(LawHoldsTest, Examples) {
  EXPECT_FALSE(law_holds(load_fixture("office_v1.json")));
  Scenario single;
  single.entities = {make_entity("A", EntityKind::known)};
  single.host = "A";
  EXPECT_FALSE(law_holds(single));
  single.connections = {edge("aa", "A", "A", ConnectionKind::self)};
  EXPECT_TRUE(law_holds(single));
  single.connections[0].blocked = true;
  EXPECT_TRUE(law_holds(single));
}

TEST(SilentClosureTest, IsolatedPair) {
  Scenario closed = silent_closure(isolated_pair());
  ASSERT_EQ(closed.connections.size(), 3u);
  EXPECT_TRUE(law_holds(closed));
  const Connection* aa = closed.find_connection("sc:A:A:0");
  const Connection* bb = closed.find_connection("sc:B:B:0");
  const Connection* ab = closed.find_connection("sc:A:B:0");
  ASSERT_TRUE(aa && bb && ab);
  EXPECT_EQ(aa->kind, ConnectionKind::self);
  EXPECT_EQ(aa->polarity, Polarity::positive);
  EXPECT_EQ(ab->kind, ConnectionKind::silent);
  EXPECT_EQ(ab->polarity, Polarity::negative);
  EXPECT_EQ(ab->magnitude, Rational(1));
  EXPECT_FALSE(ab->confirmed);
  EXPECT_TRUE(validate_scenario(closed).empty());
}

TEST(SilentClosureTest, Idempotent) {
  Scenario once = silent_closure(load_fixture("office_v1.json"));
  Scenario twice = silent_closure(once);
  EXPECT_EQ(serialize_scenario(once), serialize_scenario(twice));
}

TEST(SilentClosureTest, OfficeScoreMovesOnlyByNewTerms) {
  Scenario office = load_fixture("office_v1.json");
  Scenario closed = silent_closure(office);
  EXPECT_TRUE(law_holds(closed));
  // 5 self-connections (+1, every entity but Eb) and 15 - 5 = 10 pair
  // connections (-1); the linked pairs are Ea-Eb, Ec-Ea, Ec-Eb, Eh-Eb, Eu-Eb.
  ASSERT_EQ(closed.connections.size(), office.connections.size() + 5 + 10);
  EXPECT_EQ(connectivity_score(closed), Rational(7 + 5 - 10));
  for (const auto& c : office.connections) EXPECT_EQ(*closed.find_connection(c.id), c);
}

TEST(SilentClosureTest, GeneratedIdsAvoidCollisions) {
  Scenario s = isolated_pair();
  s.connections = {edge("sc:A:B:0", "A", "A", ConnectionKind::self)};
  Scenario closed = silent_closure(s);
  EXPECT_NE(closed.find_connection("sc:A:B:1"), nullptr);
  EXPECT_TRUE(validate_scenario(closed).empty());
}

TEST(BlockTest, ScoreDropsByTheBlockedValue) {
  Scenario office = load_fixture("office_v1.json");
  for (const auto& c : office.connections) {
    Rational before = connectivity_score(office);
    Rational value = connection_value(c, office);
    EXPECT_EQ(connectivity_score(block(office, c.id)), before - value);
  }
}

TEST(BlockTest, IdempotentAndReversible) {
  Scenario office = load_fixture("office_v1.json");
  Scenario once = block(office, "ec-eb");
  EXPECT_TRUE(block(once, "ec-eb") == once);
  EXPECT_TRUE(unblock(once, "ec-eb") == office);
  EXPECT_THROW(block(office, "missing"), IntegrityError);
  EXPECT_THROW(unblock(office, "missing"), IntegrityError);
}

TEST(BlockTest, BlockingTheNegativesRaisesOfficeToTwentyEight) {
  Scenario s = load_fixture("office_v1.json");
  for (const char* id : {"ec-ea", "ec-eb", "eb-eb"}) s = block(s, id);
  EXPECT_EQ(connectivity_score(s), Rational(28));
}

TEST(ConfirmSilentTest, OfficeIsThePostStateOfConfirmingEuEb) {
  Scenario office = load_fixture("office_v1.json");
  Scenario before = office;
  before.connections.erase(
      std::remove_if(before.connections.begin(), before.connections.end(),
                     [](const Connection& c) { return c.id == "rc:eu-eb"; }),
      before.connections.end());
  before.find_connection("eu-eb")->confirmed = false;
  before.ideal_roster->erase(before.ideal_roster->begin() + 6);
  Scenario after = confirm_silent(before, "eu-eb", Polarity::positive);
  after.ideal_roster = office.ideal_roster;
  EXPECT_TRUE(after == office);
  EXPECT_EQ(connectivity_score(after) - connectivity_score(before), Rational(7));
}

TEST(ConfirmSilentTest, StateErrors) {
  Scenario office = load_fixture("office_v1.json");
  EXPECT_THROW(confirm_silent(office, "eu-eb", Polarity::positive), StateError);
  EXPECT_THROW(confirm_silent(office, "ea-eb", Polarity::positive), StateError);
  EXPECT_THROW(confirm_silent(office, "nope", Polarity::positive), IntegrityError);
  Scenario once = confirm_silent(office, "ec-ea", Polarity::negative);
  EXPECT_THROW(confirm_silent(once, "ec-ea", Polarity::negative), StateError);
  EXPECT_EQ(connectivity_score(once), Rational(0));
}

}  // namespace
}  // namespace conncalc
