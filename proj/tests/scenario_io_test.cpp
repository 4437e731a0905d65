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
#include <random>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"
#include "support/dot_check.hpp"
#include "support/fixtures.hpp"
#include "support/random_scenario.hpp"

namespace conncalc {
namespace {

using testing::load_fixture;
using testing::read_text;

const char* kMinimal = R"({
  "version": 1,
  "host": "A",
  "entities": [{"id": "A", "kind": "known"}, {"id": "B", "kind": "hidden"}],
  "connections": [
    {"id": "ab", "src": "A", "dst": "B", "kind": "real", "polarity": 1, "magnitude": "4"}
  ]
})";

bool has_error_at(const ParseResult& r, const std::string& location,
                  const std::string& needle) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [&](const auto& d) {
    return d.severity == Severity::error && d.location == location &&
           d.message.find(needle) != std::string::npos;
  });
}

std::string with_replaced(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

TEST(ParseScenarioTest, OfficeFixture) {
  ParseResult r = parse_scenario(read_text(testing::fixture_path("office_v1.json")));
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.scenario->entities.size(), 6u);
  EXPECT_EQ(r.scenario->connections.size(), 7u);
  EXPECT_EQ(r.scenario->host, "Eb");
  EXPECT_EQ(r.scenario->ideal_roster->size(), 8u);
  EXPECT_EQ(*r.scenario->desired_connectivity, Rational(56));
}

TEST(ParseScenarioTest, MinimalDocumentDefaults) {
  ParseResult r = parse_scenario(kMinimal);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.scenario->mode, ScoringMode::raw);
  EXPECT_FALSE(r.scenario->ideal_roster.has_value());
  EXPECT_FALSE(r.scenario->desired_connectivity.has_value());
  EXPECT_EQ(r.scenario->entities[0].attributes, AttributeVector{});
}

TEST(ParseScenarioTest, MagnitudeOutOfRangeNamesConnectionAndBound) {
  ParseResult r = parse_scenario(with_replaced(kMinimal, "\"4\"", "\"11\""));
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_error_at(r, "/connections/0/magnitude", "connection:ab"));
  EXPECT_TRUE(has_error_at(r, "/connections/0/magnitude", "[1,10]"));
}

TEST(ParseScenarioTest, SyntaxErrorHasLineAndColumn) {
  ParseResult r = parse_scenario("{\n  \"version\": 1,\n  \"host\" \"A\"\n}");
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].location.substr(0, 2), "3:");
}

TEST(ParseScenarioTest, UnknownFieldsWarn) {
  ParseResult r = parse_scenario(with_replaced(kMinimal, "\"host\": \"A\",",
                                               "\"host\": \"A\", \"colour\": \"red\","));
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].severity, Severity::warning);
  EXPECT_EQ(r.diagnostics[0].location, "/colour");
}

TEST(ParseScenarioTest, BinaryFloatsAreRejected) {
  ParseResult r = parse_scenario(with_replaced(kMinimal, "\"4\"", "4.0"));
  EXPECT_TRUE(has_error_at(r, "/connections/0/magnitude", "decimal string"));
  r = parse_scenario(with_replaced(kMinimal, "\"4\"", "\"4e0\""));
  EXPECT_TRUE(has_error_at(r, "/connections/0/magnitude", "not a decimal"));
}

TEST(ParseScenarioTest, StructuralErrors) {
  EXPECT_TRUE(has_error_at(parse_scenario(with_replaced(kMinimal, "\"version\": 1",
                                                        "\"version\": 2")),
                           "/version", "version"));
  EXPECT_TRUE(has_error_at(parse_scenario(with_replaced(kMinimal, "\"polarity\": 1",
                                                        "\"polarity\": 2")),
                           "/connections/0/polarity", "1 or -1"));
  EXPECT_TRUE(has_error_at(parse_scenario(with_replaced(kMinimal, "\"polarity\": 1, ", "")),
                           "/connections/0/polarity", "missing"));
  EXPECT_TRUE(has_error_at(parse_scenario(with_replaced(kMinimal, "\"dst\": \"B\"",
                                                        "\"dst\": \"C\"")),
                           "/connections/0/dst", "unknown entity"));
  EXPECT_TRUE(has_error_at(parse_scenario(with_replaced(kMinimal, "\"kind\": \"hidden\"",
                                                        "\"kind\": \"ghost\"")),
                           "/entities/1/kind", "known, hidden or unknown"));
  EXPECT_TRUE(has_error_at(parse_scenario("[1, 2]"), "/", "object"));
  EXPECT_FALSE(parse_scenario("").ok());
}

TEST(ParseScenarioTest, AttributeAndRosterErrors) {
  std::string text = with_replaced(
      kMinimal, "{\"id\": \"A\", \"kind\": \"known\"}",
      R"({"id": "A", "kind": "known", "attributes": {"existence": "1"}})");
  EXPECT_TRUE(has_error_at(parse_scenario(text), "/entities/0/attributes/existence",
                           "open interval"));
  text = with_replaced(kMinimal, "\"host\": \"A\",",
                       R"("host": "A", "ideal_roster": [{"ref": "zz"}, {"hypothetical": {"src": "A", "dst": "B", "magnitude": "0.5"}}],)");
  ParseResult r = parse_scenario(text);
  EXPECT_TRUE(has_error_at(r, "/ideal_roster/0/ref", "unknown connection"));
  EXPECT_TRUE(has_error_at(r, "/ideal_roster/1/hypothetical/magnitude", "[1,10]"));
}

TEST(ParseScenarioTest, DuplicateIdPointsAtTheSecondOccurrence) {
  std::string text = with_replaced(kMinimal, "{\"id\": \"B\", \"kind\": \"hidden\"}",
                                   "{\"id\": \"B\", \"kind\": \"hidden\"}, "
                                   "{\"id\": \"B\", \"kind\": \"known\"}");
  EXPECT_TRUE(has_error_at(parse_scenario(text), "/entities/2/id", "duplicate"));
}

TEST(ParseScenarioTest, SelfPolarityIsOptional) {
  ParseResult r = parse_scenario(read_text(testing::fixture_path("confusion_v1.json")));
  ASSERT_TRUE(r.ok());
  const Connection* aa = r.scenario->find_connection("aa");
  EXPECT_FALSE(aa->polarity_explicit);
  EXPECT_EQ(serialize_scenario(*r.scenario).find("\"polarity\": -1"), std::string::npos);
}

TEST(SerializeScenarioTest, FixturesAreCanonical) {
  for (const char* name : {"office_v1.json", "confusion_v1.json"}) {
    EXPECT_EQ(serialize_scenario(load_fixture(name)),
              read_text(testing::fixture_path(name)))
        << name;
  }
}

TEST(SerializeScenarioTest, EqualValuesGiveIdenticalBytes) {
  Scenario office = load_fixture("office_v1.json");
  Scenario reordered = office;
  std::reverse(reordered.entities.begin(), reordered.entities.end());
  std::reverse(reordered.connections.begin(), reordered.connections.end());
  ASSERT_TRUE(office == reordered);
  EXPECT_EQ(serialize_scenario(office), serialize_scenario(reordered));
}

TEST(SerializeScenarioTest, MinimalDocument) {
  Scenario s;
  s.entities = {make_entity("solo", EntityKind::known)};
  s.host = "solo";
  EXPECT_EQ(serialize_scenario(s),
            "{\n"
            "  \"version\": 1,\n"
            "  \"host\": \"solo\",\n"
            "  \"mode\": \"raw\",\n"
            "  \"entities\": [\n"
            "    {\n"
            "      \"id\": \"solo\",\n"
            "      \"kind\": \"known\"\n"
            "    }\n"
            "  ],\n"
            "  \"connections\": []\n"
            "}\n");
}

TEST(SerializeScenarioTest, RoundTripIsIdentity) {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 100; ++i) {
    Scenario s = testing::random_scenario(rng, {.max_entities = 12, .max_connections = 30});
    std::string text = serialize_scenario(s);
    ParseResult back = parse_scenario(text);
    ASSERT_TRUE(back.ok()) << text;
    EXPECT_TRUE(*back.scenario == s);
    EXPECT_EQ(serialize_scenario(*back.scenario), text);
  }
}

TEST(ExportDotTest, OfficeMatchesFigureConventions) {
  std::string dot = export_dot(load_fixture("office_v1.json"));
  EXPECT_EQ(dot, read_text(testing::golden_path("office_v1.dot")));
  testing::DotSummary summary = testing::summarize_dot(dot);
  ASSERT_TRUE(summary.parsed);
  EXPECT_EQ(summary.nodes, 6u);
  EXPECT_EQ(summary.edges, 7u);
  EXPECT_EQ(summary.edge_styles["dashed"], 3u);
  EXPECT_EQ(summary.edge_styles["solid"], 4u);
  EXPECT_EQ(summary.self_loops, 1u);
  EXPECT_EQ(std::count(summary.labels.begin(), summary.labels.end(), "-7"), 3);
  EXPECT_EQ(std::count(summary.labels.begin(), summary.labels.end(), "+7"), 4);
  EXPECT_NE(dot.find("\"Eb\" [label=\"Eb\", style=solid, shape=doublecircle]"),
            std::string::npos);
}

TEST(ExportDotTest, SelfConnectionOnly) {
  Scenario s;
  s.entities = {make_entity("A", EntityKind::known)};
  s.host = "A";
  Connection c;
  c.id = "aa";
  c.src = c.dst = "A";
  c.kind = ConnectionKind::self;
  c.magnitude = 3;
  s.connections = {c};
  testing::DotSummary summary = testing::summarize_dot(export_dot(s));
  ASSERT_TRUE(summary.parsed);
  EXPECT_EQ(summary.nodes, 1u);
  EXPECT_EQ(summary.self_loops, 1u);
}

TEST(ExportDotTest, BlockedEdgesAreMarked) {
  Scenario s = block(load_fixture("office_v1.json"), "ec-eb");
  std::string dot = export_dot(s);
  testing::DotSummary summary = testing::summarize_dot(dot);
  ASSERT_TRUE(summary.parsed);
  EXPECT_EQ(summary.tee_edges, 1u);
  EXPECT_NE(dot.find("[id=\"ec-eb\", label=\"-7\", style=solid, color=gray50"),
            std::string::npos);
}

TEST(ExportDotTest, QuotesAwkwardIds) {
  Scenario s;
  s.entities = {make_entity("say \"hi\"", EntityKind::known), make_entity("b\\c", EntityKind::unknown)};
  s.host = "say \"hi\"";
  testing::DotSummary summary = testing::summarize_dot(export_dot(s));
  EXPECT_TRUE(summary.parsed);
  EXPECT_EQ(summary.nodes, 2u);
}

TEST(EmitReportTest, OfficeTable) {
  std::string text = emit_report(efficiency(load_fixture("office_v1.json")), ReportFormat::table);
  EXPECT_NE(text.find("score=7 ideal=56 efficiency=12.5% band=failing"), std::string::npos);
}

TEST(EmitReportTest, MachineFormatParses) {
  auto doc = nlohmann::json::parse(
      emit_report(efficiency(load_fixture("office_v1.json")), ReportFormat::machine));
  EXPECT_EQ(doc["score"], "7");
  EXPECT_EQ(doc["ideal"], "56");
  EXPECT_EQ(doc["efficiency_percent"], "12.5");
  EXPECT_EQ(doc["band"], "failing");

  Scenario confusion = resolve_self_conflict(load_fixture("confusion_v1.json"));
  doc = nlohmann::json::parse(emit_report(detect_confusion(confusion), ReportFormat::machine));
  EXPECT_EQ(doc["z"], "-1");
  EXPECT_EQ(doc["quality_percent"], "-12.5");
  EXPECT_EQ(doc["confused"], true);
  EXPECT_EQ(doc["causes"], nlohmann::json::array({"self_conflict"}));
}

TEST(EmitReportTest, TrajectoryHasOneRowPerStep) {
  QualityTrajectory t = run_removal(load_fixture("office_v1.json"), RemovalOrder::most_first);
  std::string table = emit_report(t, ReportFormat::table);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 2 + 7);
  auto doc = nlohmann::json::parse(emit_report(t, ReportFormat::machine));
  EXPECT_EQ(doc["steps"].size(), 7u);
  EXPECT_EQ(doc["steps"][0]["step"], 1);
}

}  // namespace
}  // namespace conncalc
