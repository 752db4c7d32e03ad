#include "dqa/config.hpp"

#include "doctest.h"

using namespace dqa;
using nlohmann::json;

TEST_CASE("empty config document applies all defaults") {
  Config cfg = parse_config(json::object());
  CHECK(cfg.type_property == vocab::rdf::type);
  CHECK(cfg.label_property == vocab::rdfs::label);
  CHECK(cfg.comment_property == vocab::rdfs::comment);
  CHECK(cfg.sameas_property == vocab::owl::sameAs);
  CHECK(cfg.uri_length_threshold == 80);
  CHECK_FALSE(cfg.dataset_base_iri.has_value());
}

TEST_CASE("overrides are applied") {
  Config cfg = parse_config(json::parse(R"({
    "label_property": "http://www.w3.org/2004/02/skos/core#prefLabel",
    "dataset_base_iri": "http://data.example.org/",
    "uri_length_threshold": 120,
    "enabled_shapes": {"TW23": true, "RC2": false},
    "domain_knowledge": {
      "T1": {"DATE_RANGE_MIN_BOUND": "2020-01-01"},
      "SV2A2": [{"PROPERTY_URI": "http://e/p", "PATTERN": "^[A-Z]"}]
    }
  })"));
  CHECK(cfg.label_property == "http://www.w3.org/2004/02/skos/core#prefLabel");
  CHECK(cfg.dataset_base_iri == "http://data.example.org/");
  CHECK(cfg.uri_length_threshold == 120);
  CHECK(cfg.enabled_shapes.at("TW23") == true);
  CHECK(cfg.enabled_shapes.at("RC2") == false);
  CHECK(cfg.domain_knowledge.at("T1").size() == 1);
  CHECK(cfg.domain_knowledge.at("SV2A2").size() == 1);
}

TEST_CASE("unknown keys are rejected by name") {
  try {
    parse_config(json::parse(R"({"labels": "x"})"));
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("labels") != std::string::npos);
  }
}

TEST_CASE("non-IRI property values are rejected") {
  CHECK_THROWS_AS(parse_config(json::parse(R"({"type_property": "notaniri"})")),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"type_property": 5})")),
                  ConfigError);
}

TEST_CASE("threshold must be positive") {
  CHECK_THROWS_AS(parse_config(json::parse(R"({"uri_length_threshold": 0})")),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"uri_length_threshold": -4})")),
                  ConfigError);
}
