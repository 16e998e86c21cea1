#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "softclust/space_file.hpp"

using namespace softclust;
using namespace softclust::test;

TEST_CASE("the shipped worked fixture parses with the expected verdicts") {
  SpaceBundle bundle = parse_space_file(fixture_path("example_4_7.json"));
  CHECK(bundle.carrier->parameter_count() == 2);
  CHECK(bundle.carrier->element_count() == 3);
  CHECK(bundle.sets.size() == 19);  // A1..A15 and R1..R4

  REQUIRE(bundle.topology_stanza == TopologyStanza::opens);
  REQUIRE(bundle.topology_check.has_value());
  CHECK_FALSE(bundle.topology_check->valid);
  CHECK(bundle.topology_check->violation->axiom == 2);
  CHECK_FALSE(bundle.topology.has_value());

  REQUIRE(bundle.ideal_stanza == IdealStanza::generators);
  REQUIRE(bundle.ideal_check.has_value());
  CHECK(bundle.ideal_check->valid);
  CHECK(bundle.ideal_check->top == kIdealTop);
  CHECK(bundle.ideal->top() == kIdealTop);

  std::string report = render_validate_text(bundle);
  CHECK(report.find("topology: INVALID axiom=intersection") != std::string::npos);
  CHECK(report.find("ideal: VALID family top = {alpha: {y, z}, beta: {x, z}}") !=
        std::string::npos);
  CHECK_FALSE(bundle_all_valid(bundle));
  CHECK_THROWS_AS(bundle_context(bundle), InputError);

  nlohmann::json doc = nlohmann::json::parse(render_validate_json(bundle));
  CHECK(doc["topology"]["valid"] == false);
  CHECK(doc["ideal"]["family_valid"] == true);
}

TEST_CASE("the same family as a subbase generates a valid topology") {
  SpaceBundle opens_bundle = parse_space_file(fixture_path("example_4_7.json"));
  nlohmann::ordered_json doc =
      nlohmann::ordered_json::parse(serialize_space(opens_bundle));
  // Rewrite the topology stanza to generate from the original six members.
  nlohmann::ordered_json subbase = nlohmann::ordered_json::array();
  for (const char* name : {"R1", "R2", "R3", "R4"}) subbase.push_back(name);
  doc["topology"] = nlohmann::ordered_json{{"subbase", subbase}};
  SpaceBundle generated = parse_space_text(doc.dump());

  REQUIRE(generated.topology_stanza == TopologyStanza::subbase);
  REQUIRE(generated.topology.has_value());
  CHECK(generated.topology->is_open(kR2 & kR3));
  CHECK(check_topology_family(generated.carrier, generated.topology->opens()).valid);
  CHECK(bundle_all_valid(generated));
}

TEST_CASE("semantic errors carry the offending entity") {
  const char* unknown_element = R"({
    "universe": ["x"], "parameters": ["a"],
    "sets": {"S": {"a": ["nope"]}}
  })";
  CHECK_THROWS_WITH_AS(parse_space_text(unknown_element), "unknown element label: nope",
                       InputError);

  const char* unknown_name = R"({
    "universe": ["x"], "parameters": ["a"],
    "topology": {"opens": ["Phi", "S", "X"]}
  })";
  CHECK_THROWS_WITH_AS(parse_space_text(unknown_name), "unknown set name: S", InputError);

  const char* reserved = R"({
    "universe": ["x"], "parameters": ["a"],
    "sets": {"Phi": {"a": []}}
  })";
  CHECK_THROWS_AS(parse_space_text(reserved), InputError);

  const char* both_keys = R"({
    "universe": ["x"], "parameters": ["a"],
    "topology": {"opens": [], "subbase": []}
  })";
  CHECK_THROWS_AS(parse_space_text(both_keys), InputError);

  CHECK_THROWS_AS(parse_space_text("{not json"), InputError);
  CHECK_THROWS_AS(parse_space_file(fixture_path("missing.json")), InputError);
}

TEST_CASE("parse-serialize-parse is the identity on valid files") {
  for (const char* name : {"example_4_3.json", "example_4_11.json", "example_4_12.json",
                           "example_4_13.json", "example_4_14.json",
                           "prop4_9_counterexample.json"}) {
    CAPTURE(name);
    SpaceBundle bundle = parse_space_file(fixture_path(name));
    CHECK(bundle_all_valid(bundle));
    std::string once = serialize_space(bundle);
    SpaceBundle reparsed = parse_space_text(once);
    std::string twice = serialize_space(reparsed);
    REQUIRE(once == twice);
    CHECK(bundle.carrier->same_as(*reparsed.carrier));
    CHECK(bundle.sets == reparsed.sets);
    REQUIRE(bundle.topology.has_value() == reparsed.topology.has_value());
    if (bundle.topology.has_value()) {
      CHECK(bundle.topology->opens() == reparsed.topology->opens());
    }
    REQUIRE(bundle.ideal.has_value() == reparsed.ideal.has_value());
    if (bundle.ideal.has_value()) CHECK(bundle.ideal->top() == reparsed.ideal->top());
  }
}

TEST_CASE("set name resolution") {
  SpaceBundle bundle = parse_space_file(fixture_path("example_4_7.json"));
  CHECK(resolve_set_name(bundle, "Phi") == 0);
  CHECK(resolve_set_name(bundle, "X") == bundle.carrier->full());
  CHECK(resolve_set_name(bundle, "R2") == kR2);
  CHECK_THROWS_AS(resolve_set_name(bundle, "R9"), InputError);
}
