#include "dqa/catalog.hpp"

#include <set>

#include "doctest.h"
#include "dqa/manifest.hpp"

using namespace dqa;
using catalog::MeasureKind;
using catalog::Source;

TEST_CASE("catalog has exactly 64 templates with unique ids") {
  const auto& all = catalog::all_templates();
  CHECK(all.size() == 64);
  std::set<std::string> ids;
  for (const auto& t : all) ids.insert(t.id);
  CHECK(ids.size() == 64);
}

TEST_CASE("38 shapes instantiate without domain knowledge, 5 more excluded") {
  size_t enabled_auto = 0, disabled_auto = 0, manual = 0;
  for (const auto& t : catalog::all_templates()) {
    if (t.source == Source::Manual) {
      ++manual;
      CHECK_FALSE(t.enabled_by_default);
    } else if (t.enabled_by_default) {
      ++enabled_auto;
    } else {
      ++disabled_auto;
    }
  }
  CHECK(enabled_auto == 38);
  CHECK(disabled_auto == 5);
  CHECK(manual == 21);
}

TEST_CASE("the five excluded shapes are cataloged but disabled") {
  for (const char* id : {"I1M4b", "S1a", "S1b", "TW23", "TW5b"}) {
    const auto* t = catalog::find_template(id);
    REQUIRE(t != nullptr);
    CHECK_FALSE(t->enabled_by_default);
    CHECK(t->source != Source::Manual);
  }
}

TEST_CASE("every template names its listing caption") {
  for (const auto& t : catalog::all_templates()) {
    CHECK_FALSE(t.listing_caption.empty());
    CHECK_FALSE(t.shape_name.empty());
    CHECK_FALSE(t.group.empty());
    CHECK_FALSE(t.dimension.empty());
  }
}

TEST_CASE("P1 has a placeholder-free body except config slots") {
  const auto* t = catalog::find_template("P1");
  REQUIRE(t != nullptr);
  CHECK(t->placeholders.empty());
  CHECK(t->metrics.size() == 1);
  CHECK(t->metrics[0].kind == MeasureKind::Ratio);
  CHECK(t->metrics[0].denominator == catalog::Denominator::Entities);
  CHECK(t->listing_caption == "Performance - Use of Hash URIs in Entities");
}

TEST_CASE("measure kind assignment matches the paper's measure table") {
  auto kind_of = [](const std::string& metric) {
    for (const auto& t : catalog::all_templates())
      for (const auto& m : t.metrics)
        if (m.metric_id == metric) return m.kind;
    FAIL("unknown metric ", metric);
    return MeasureKind::Binary;
  };
  // Binary rows of the appendix table.
  for (const char* m : {"A2", "L1", "S2", "CN4a", "U1d", "U2", "U3a", "U5", "V1"})
    CHECK(kind_of(m) == MeasureKind::Binary);
  // Ratio rows.
  for (const char* m : {"I2", "P1", "CP4", "U1a", "U1b", "U1c", "U3b", "RC1a",
                        "RC1b", "RC2", "V2a", "V2b", "ITP1a", "ITP4", "T1"})
    CHECK(kind_of(m) == MeasureKind::Ratio);
  // Composite rows.
  for (const char* m :
       {"SV3", "CN1", "CN2a", "CN2b", "CN3a", "CN3b", "CN4b", "CN5",
        "CN9-domain", "CN9-range", "CN10a", "CN10b", "CN10c", "CP1", "ITP1b",
        "ITP3a", "ITP3b"})
    CHECK(kind_of(m) == MeasureKind::Composite);
  // The open-chain checks stay out of the measure table.
  CHECK(kind_of("I1M4a") == MeasureKind::ReportOnly);
  CHECK(kind_of("I1M4b") == MeasureKind::ReportOnly);
}

TEST_CASE("ratio denominators follow the paper's formulas") {
  using catalog::Denominator;
  auto den_of = [](const std::string& metric) {
    for (const auto& t : catalog::all_templates())
      for (const auto& m : t.metrics)
        if (m.metric_id == metric) return m.denominator;
    return Denominator::None;
  };
  for (const char* m :
       {"P1", "CP4", "U1a", "U3b", "RC1a", "RC1b", "RC2", "ITP1a", "ITP4", "T1"})
    CHECK(den_of(m) == Denominator::Entities);
  CHECK(den_of("I2") == Denominator::EntitiesWithInterlink);
  CHECK(den_of("V2a") == Denominator::EntitiesWithLabel);
  CHECK(den_of("V2b") == Denominator::EntitiesWithDescription);
  CHECK(den_of("U1b") == Denominator::SchemaClasses);
  CHECK(den_of("U1c") == Denominator::SchemaProperties);
}

TEST_CASE("CN9 carries the domain and range variants") {
  const auto* dom = catalog::find_template("CN9-domain");
  const auto* rng = catalog::find_template("CN9-range");
  REQUIRE(dom != nullptr);
  REQUIRE(rng != nullptr);
  CHECK(dom->variants.count("thing") == 1);
  CHECK(rng->variants.count("class") == 1);
  CHECK(rng->variants.count("literal") == 1);
  CHECK(rng->variants.count("thing") == 1);
  CHECK(rng->variants.count("resource") == 1);
}

TEST_CASE("every placeholder in a body is declared, and vice versa") {
  using shacl::Constraint;
  using shacl::Shape;
  for (const auto& t : catalog::all_templates()) {
    std::set<std::string> found;
    struct Walker {
      const catalog::ShapeTemplate& t;
      std::set<std::string>* found;
      void term(const rdf::Term& x) {
        if (x.is_iri() && x.value.rfind(catalog::ph_ns::placeholder, 0) == 0)
          found->insert(x.value.substr(catalog::ph_ns::placeholder.size()));
        if (x.is_literal() && t.placeholder(x.value)) found->insert(x.value);
      }
      void path(const shacl::Path& p) {
        if (p.kind == shacl::Path::Kind::Predicate) term(p.predicate);
        for (const auto& c : p.children) path(c);
      }
      void shape(const Shape& s) {
        if (s.path) path(*s.path);
        for (const auto& c : s.constraints) {
          term(c.term_param);
          term(c.other_property);
          for (const auto& i : c.list_param) term(i);
          if (!c.int_placeholder.empty()) found->insert(c.int_placeholder);
          if (c.component == shacl::Component::Pattern) {
            for (const auto& p : t.placeholders)
              if (c.pattern.find(p.name) != std::string::npos)
                found->insert(p.name);
          }
          for (const auto& inner : c.shapes) shape(inner);
        }
      }
    } walker{t, &found};
    walker.shape(t.body);
    for (const auto& [key, v] : t.variants) walker.shape(v);
    for (const auto& target : t.targets) walker.term(target.term);

    std::set<std::string> declared;
    for (const auto& p : t.placeholders) declared.insert(p.name);
    CHECK_MESSAGE(found == declared, "template ", t.id);
  }
}

TEST_CASE("catalog manifest renders every template body as Turtle") {
  auto m = catalog_manifest();
  CHECK(m.size() == 64);
  for (const auto& item : m) {
    CHECK(item["turtle"].get<std::string>().find("sh:NodeShape") !=
          std::string::npos);
  }
}
