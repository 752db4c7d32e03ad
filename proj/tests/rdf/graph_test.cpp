#include "dqa/rdf/graph.hpp"

#include <random>

#include "doctest.h"
#include "dqa/rdf/ntriples.hpp"
#include "dqa/rdf/turtle.hpp"

using namespace dqa;
using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

Term iri(int i) { return Term::iri("http://e/n" + std::to_string(i)); }

// Independent oracle: linear scan over a copy of all triples.
std::vector<Triple> scan_match(const std::vector<Triple>& all,
                               const std::optional<Term>& s,
                               const std::optional<Term>& p,
                               const std::optional<Term>& o) {
  std::vector<Triple> out;
  for (const auto& t : all) {
    if (s && !(t.subject == *s)) continue;
    if (p && !(t.predicate == *p)) continue;
    if (o && !(t.object == *o)) continue;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("match with all positions bound answers membership") {
  Graph g;
  g.insert(iri(1), iri(2), iri(3));
  CHECK(g.contains(iri(1), iri(2), iri(3)));
  CHECK_FALSE(g.contains(iri(1), iri(2), iri(4)));
  CHECK(g.match(iri(1), iri(2), iri(3)).size() == 1);
}

TEST_CASE("index coherence: random probes equal full scan") {
  std::mt19937 rng(42);
  Graph g;
  std::vector<Triple> all;
  for (int i = 0; i < 400; ++i) {
    Triple t{iri(int(rng() % 20)), iri(int(rng() % 8)), iri(int(rng() % 25))};
    g.insert(t);
    all.push_back(t);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  CHECK(g.size() == all.size());

  for (int probe = 0; probe < 200; ++probe) {
    std::optional<Term> s, p, o;
    if (rng() % 2) s = iri(int(rng() % 22));
    if (rng() % 2) p = iri(int(rng() % 10));
    if (rng() % 2) o = iri(int(rng() % 27));
    auto via_index = g.match(s, p, o);
    std::sort(via_index.begin(), via_index.end());
    auto via_scan = scan_match(all, s, p, o);
    CHECK(via_index == via_scan);
  }
}

TEST_CASE("owl:sameAs lookup on a mixed fixture") {
  Graph g = rdf::load_graph(R"(
@prefix ex: <http://e/> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
ex:a owl:sameAs ex:x . ex:b owl:sameAs ex:y .
ex:a ex:p ex:b . ex:b ex:p ex:c . ex:c ex:p ex:d .
ex:a a ex:T . ex:b a ex:T . ex:c a ex:T . ex:d a ex:T . ex:x a ex:T .
)");
  REQUIRE(g.size() == 10);
  auto hits = g.match(std::nullopt, Term::iri(vocab::owl::sameAs), std::nullopt);
  CHECK(hits.size() == 2);
}

TEST_CASE("match on empty graph yields nothing") {
  Graph g;
  CHECK(g.match(std::nullopt, std::nullopt, std::nullopt).empty());
}

TEST_CASE("absorb renames blank nodes apart") {
  Graph a = rdf::load_graph("_:x <http://e/p> \"1\" .");
  Graph b = rdf::load_graph("_:x <http://e/p> \"2\" .");
  Graph u;
  u.absorb(a, "_g1");
  u.absorb(b, "_g2");
  CHECK(u.size() == 2);
  // Same label in two documents must not merge.
  auto subjects = u.match(std::nullopt, Term::iri("http://e/p"), std::nullopt);
  CHECK(subjects[0].subject != subjects[1].subject);
}

TEST_CASE("sorted match is deterministic ntriples order") {
  Graph g = rdf::load_graph(R"(
@prefix ex: <http://e/> .
ex:b ex:p ex:z . ex:a ex:p ex:y . ex:a ex:p ex:x .
)");
  auto ts = g.match(std::nullopt, std::nullopt, std::nullopt, true);
  REQUIRE(ts.size() == 3);
  CHECK(rdf::to_ntriples(ts[0]) < rdf::to_ntriples(ts[1]));
  CHECK(rdf::to_ntriples(ts[1]) < rdf::to_ntriples(ts[2]));
}
