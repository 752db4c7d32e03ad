#include "dqa/profile.hpp"

#include "doctest.h"
#include "dqa/enrich.hpp"
#include "dqa/rdf/turtle.hpp"

using namespace dqa;
using rdf::Term;

namespace {

struct Fixture {
  rdf::Graph raw, enriched, schema;
  ProfileSummary summary;
};

Fixture profiled(const std::string& data_ttl, const std::string& schema_ttl,
                 const std::string& metadata_ttl = "",
                 Config cfg = Config{}) {
  Fixture f;
  f.raw = rdf::load_graph(data_ttl);
  std::vector<rdf::Graph> schemas;
  if (!schema_ttl.empty()) schemas.push_back(rdf::load_graph(schema_ttl));
  f.enriched = enrich(f.raw, schemas).first;
  f.schema = enrich_schemas(schemas);
  if (!metadata_ttl.empty()) {
    auto md = rdf::load_graph(metadata_ttl);
    f.summary = profile(f.enriched, f.raw, f.schema, &md, cfg);
  } else {
    f.summary = profile(f.enriched, f.raw, f.schema, nullptr, cfg);
  }
  return f;
}

}  // namespace

TEST_CASE("empty graph profiles to zeros") {
  auto f = profiled("", "");
  CHECK(f.summary.entity_count == 0);
  CHECK(f.summary.triple_count == 0);
  CHECK(f.summary.used_classes.empty());
  CHECK(f.summary.used_properties.empty());
  CHECK_FALSE(f.summary.metadata.has_void_dataset);
}

TEST_CASE("entity filter excludes classes, properties and named individuals") {
  // 3 subjects typed ex:City; one of them also typed rdfs:Class.
  auto f = profiled(R"(
@prefix ex: <http://e/> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
ex:a a ex:City . ex:b a ex:City .
ex:weird a ex:City ; a rdfs:Class .
)",
                    "");
  CHECK(f.summary.entity_count == 2);
  CHECK(f.summary.is_entity(Term::iri("http://e/a")));
  CHECK_FALSE(f.summary.is_entity(Term::iri("http://e/weird")));
}

TEST_CASE("schema-declared terms never count as entities") {
  auto f = profiled(R"(
@prefix ex: <http://e/> .
ex:a a ex:City .
ex:City a ex:Meta .
)",
                    R"(
@prefix ex: <http://e/> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
ex:City a owl:Class .
)");
  // ex:City is typed in the data but promoted to rdfs:Class by enrichment.
  CHECK(f.summary.entity_count == 1);
}

TEST_CASE("label, comment and interlink tallies") {
  auto f = profiled(R"(
@prefix ex: <http://e/> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
ex:a a ex:T ; rdfs:label "a" ; owl:sameAs ex:ext .
ex:b a ex:T ; rdfs:label "b" ; rdfs:comment "about b" .
ex:c a ex:T .
)",
                    "");
  CHECK(f.summary.entity_count == 3);
  CHECK(f.summary.entities_with_label == 2);
  CHECK(f.summary.entities_with_description == 1);
  CHECK(f.summary.entities_with_interlink == 1);
}

TEST_CASE("custom label property is honored") {
  Config cfg;
  cfg.label_property = "http://www.w3.org/2004/02/skos/core#prefLabel";
  auto f = profiled(R"(
@prefix ex: <http://e/> .
@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
ex:a a ex:T ; skos:prefLabel "a" .
ex:b a ex:T ; rdfs:label "b" .
)",
                    "", "", cfg);
  CHECK(f.summary.entities_with_label == 1);
}

TEST_CASE("used classes and properties come from the raw data graph") {
  auto f = profiled(R"(
@prefix ex: <http://e/> .
ex:a a ex:City ; ex:name "A" .
)",
                    R"(
@prefix ex: <http://e/> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
ex:City a owl:Class .
ex:Country a owl:Class .
ex:name a owl:DatatypeProperty ; rdfs:range rdfs:Literal .
)");
  CHECK(f.summary.used_classes == std::set<std::string>{"http://e/City"});
  CHECK(f.summary.used_properties ==
        std::set<std::string>{vocab::rdf::type, "http://e/name"});
  CHECK(f.summary.declared.schema_classes ==
        std::set<std::string>{"http://e/City", "http://e/Country"});
  CHECK(f.summary.declared.schema_properties.count("http://e/name") == 1);
}

TEST_CASE("subjects-per-property equals the full-scan oracle") {
  auto f = profiled(R"(
@prefix ex: <http://e/> .
ex:a ex:p ex:b . ex:a ex:p ex:c . ex:b ex:p ex:d . ex:x ex:q ex:y .
)",
                    "");
  CHECK(f.summary.subjects_per_property.at("http://e/p") == 2);
  CHECK(f.summary.subjects_per_property.at("http://e/q") == 1);
  for (const auto& [p, n] : f.summary.subjects_per_property) {
    std::set<Term> subjects;
    for (const auto& t :
         f.enriched.match(std::nullopt, Term::iri(p), std::nullopt))
      subjects.insert(t.subject);
    CHECK(n == subjects.size());
    CHECK(f.summary.used_properties.count(p) == 1);
  }
}

TEST_CASE("declared inventories and disjoint pairs") {
  auto f = profiled("", R"(
@prefix ex: <http://e/> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
ex:ifp a owl:InverseFunctionalProperty .
ex:fp a owl:FunctionalProperty .
ex:irr a owl:IrreflexiveProperty .
ex:asym a owl:AsymmetricProperty .
ex:dp a owl:DatatypeProperty .
ex:op a owl:ObjectProperty .
ex:OldC a owl:DeprecatedClass .
ex:oldP a owl:DeprecatedProperty .
ex:A owl:disjointWith ex:B .
ex:B owl:disjointWith ex:A .
)");
  const auto& d = f.summary.declared;
  CHECK(d.inverse_functional == std::set<std::string>{"http://e/ifp"});
  CHECK(d.functional == std::set<std::string>{"http://e/fp"});
  CHECK(d.irreflexive == std::set<std::string>{"http://e/irr"});
  CHECK(d.asymmetric == std::set<std::string>{"http://e/asym"});
  CHECK(d.deprecated_classes == std::set<std::string>{"http://e/OldC"});
  CHECK(d.deprecated_properties == std::set<std::string>{"http://e/oldP"});
  // Symmetric declarations collapse into one canonical pair.
  CHECK(d.disjoint_pairs.size() == 1);
  CHECK(d.disjoint_pairs.count({"http://e/A", "http://e/B"}) == 1);
}

TEST_CASE("range classification covers all five variants") {
  auto f = profiled("", R"(
@prefix ex: <http://e/> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
ex:age rdfs:range xsd:integer .
ex:knows rdfs:range ex:Person .
ex:note rdfs:range rdfs:Literal .
ex:thing rdfs:range owl:Thing .
ex:any rdfs:range rdfs:Resource .
ex:custom rdfs:range ex:MyType .
ex:MyType a rdfs:Datatype .
ex:home rdfs:domain ex:Person .
ex:misc rdfs:domain owl:Thing .
)");
  auto kind = [&](const std::string& p) {
    return f.summary.range_properties.at("http://e/" + p)[0].kind;
  };
  CHECK(kind("age") == RangeSpec::Kind::Datatype);
  CHECK(kind("knows") == RangeSpec::Kind::Class);
  CHECK(kind("note") == RangeSpec::Kind::LiteralAny);
  CHECK(kind("thing") == RangeSpec::Kind::ThingAny);
  CHECK(kind("any") == RangeSpec::Kind::ResourceAny);
  CHECK(kind("custom") == RangeSpec::Kind::Datatype);  // declared rdfs:Datatype
  CHECK(f.summary.datatype_range_properties.at("http://e/age") ==
        std::vector<std::string>{vocab::xsd::integer});
  CHECK(f.summary.domain_properties.at("http://e/home")[0].iri ==
        "http://e/Person");
  CHECK(f.summary.domain_properties.at("http://e/misc")[0].thing);
}

TEST_CASE("metadata flags") {
  auto f = profiled("", "", R"(
@prefix void: <http://rdfs.org/ns/void#> .
@prefix ex: <http://e/> .
ex:ds a void:Dataset ;
  void:uriSpace "http://e/" .
)");
  CHECK(f.summary.metadata.has_void_dataset);
  CHECK_FALSE(f.summary.metadata.has_dcat_dataset);
  CHECK(f.summary.metadata.uri_spaces ==
        std::vector<std::string>{"http://e/"});
  CHECK(f.summary.metadata.uri_regex_patterns.empty());
}

TEST_CASE("profile is insensitive to triple order") {
  std::string a = R"(
@prefix ex: <http://e/> .
ex:a a ex:T . ex:b a ex:T . ex:a ex:p ex:b .
)";
  std::string b = R"(
@prefix ex: <http://e/> .
ex:a ex:p ex:b . ex:b a ex:T . ex:a a ex:T .
)";
  auto f1 = profiled(a, "");
  auto f2 = profiled(b, "");
  CHECK(f1.summary.entity_set == f2.summary.entity_set);
  CHECK(f1.summary.used_properties == f2.summary.used_properties);
  CHECK(f1.summary.subjects_per_property == f2.summary.subjects_per_property);
}
