#include "dqa/shacl/report.hpp"

#include "doctest.h"
#include "dqa/rdf/turtle.hpp"

using namespace dqa;
using namespace dqa::shacl;
using namespace dqa::shacl::build;
using rdf::Term;

namespace {
ValidationReport sample_report() {
  auto g = rdf::load_graph(R"(
@prefix ex: <http://e/> .
ex:a ex:isbn "X" . ex:b ex:isbn "X" .
)");
  RootShape s;
  s.id = "CN5:abc";
  s.shape = node_shape({property(property_shape(
      Path::inverse(Path::pred("http://e/isbn")), {max_count(1)}))});
  s.targets = {{TargetKind::ObjectsOf, Term::iri("http://e/isbn")}};
  return validate(g, {s});
}
}  // namespace

TEST_CASE("json report carries every field of each result") {
  auto report = sample_report();
  REQUIRE(report.results.size() == 1);
  auto j = report_to_json(report);
  CHECK(j["conforms"] == false);
  REQUIRE(j["results"].size() == 1);
  const auto& r = j["results"][0];
  CHECK(r["focusNode"]["type"] == "literal");
  CHECK(r["focusNode"]["value"] == "X");
  CHECK(r["resultPath"] == "^<http://e/isbn>");
  CHECK(r["sourceShape"] == "CN5:abc");
  CHECK(r["sourceConstraintComponent"] == "MaxCountConstraintComponent");
  CHECK(j["resultCountsByShape"]["CN5:abc"] == 1);
}

TEST_CASE("turtle report parses and has one ValidationResult per result") {
  auto report = sample_report();
  std::string ttl = report_to_turtle(report);
  auto g = rdf::load_graph(ttl);
  auto results = g.match(std::nullopt, Term::iri(vocab::rdf::type),
                         Term::iri(vocab::sh::ValidationResult));
  CHECK(results.size() == report.results.size());
  auto conforms = g.match(std::nullopt, Term::iri(vocab::sh::conforms),
                          std::nullopt);
  REQUIRE(conforms.size() == 1);
  CHECK(conforms[0].object.value == "false");
  auto focus = g.match(std::nullopt, Term::iri(vocab::sh::focusNode),
                       std::nullopt);
  REQUIRE(focus.size() == 1);
  CHECK(focus[0].object == Term::plain("X"));
}

TEST_CASE("conforming report") {
  ValidationReport r;
  r.conforms = true;
  auto j = report_to_json(r);
  CHECK(j["conforms"] == true);
  CHECK(j["results"].empty());
  auto g = rdf::load_graph(report_to_turtle(r));
  CHECK(g.size() >= 2);  // type + conforms
}
