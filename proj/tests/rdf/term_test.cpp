#include "dqa/rdf/term.hpp"

#include "doctest.h"
#include "dqa/rdf/ntriples.hpp"

using namespace dqa;
using rdf::Term;

TEST_CASE("term equality is structural") {
  CHECK(Term::iri("http://ex.org/a") == Term::iri("http://ex.org/a"));
  CHECK(Term::iri("http://ex.org/a") != Term::iri("http://ex.org/b"));
  CHECK(Term::plain("x") == Term::literal("x", vocab::xsd::string_));
  CHECK(Term::plain("x") != Term::literal("x", vocab::xsd::integer));
  CHECK(Term::blank("b0") != Term::iri("b0"));
}

TEST_CASE("language tags are lowercased and imply rdf:langString") {
  Term t = Term::lang_literal("Haus", "DE");
  CHECK(t.language == "de");
  CHECK(t.datatype == vocab::rdf::langString);
  CHECK(t == Term::lang_literal("Haus", "de"));
}

TEST_CASE("ntriples rendering") {
  CHECK(rdf::to_ntriples(Term::iri("http://ex.org/a")) == "<http://ex.org/a>");
  CHECK(rdf::to_ntriples(Term::blank("b1")) == "_:b1");
  CHECK(rdf::to_ntriples(Term::plain("x")) == "\"x\"");
  CHECK(rdf::to_ntriples(Term::literal("5", vocab::xsd::integer)) ==
        "\"5\"^^<http://www.w3.org/2001/XMLSchema#integer>");
  CHECK(rdf::to_ntriples(Term::lang_literal("x", "en")) == "\"x\"@en");
  CHECK(rdf::to_ntriples(Term::plain("a\"b\nc")) == "\"a\\\"b\\nc\"");
}
