#pragma once

#include <set>
#include <string>
#include <vector>

#include "dqa/rdf/graph.hpp"

namespace dqa {

using rdf::Graph;
using rdf::Term;

struct EnrichmentReport {
  size_t added_class_typings = 0;
  size_t added_property_typings = 0;
  size_t added_named_individual_typings = 0;
  size_t merged_schema_triples = 0;

  size_t total_added() const {
    return added_class_typings + added_property_typings +
           added_named_individual_typings + merged_schema_triples;
  }
};

namespace enrich_detail {

// OWL property flavors whose subjects are promoted to rdf:Property.
inline const std::vector<std::string>& owl_property_classes() {
  static const std::vector<std::string> v = {
      vocab::owl::DatatypeProperty,        vocab::owl::ObjectProperty,
      vocab::owl::AnnotationProperty,      vocab::owl::FunctionalProperty,
      vocab::owl::InverseFunctionalProperty, vocab::owl::TransitiveProperty,
      vocab::owl::SymmetricProperty,       vocab::owl::AsymmetricProperty,
      vocab::owl::ReflexiveProperty,       vocab::owl::IrreflexiveProperty,
      vocab::owl::OntologyProperty,        vocab::owl::DeprecatedProperty,
  };
  return v;
}

}  // namespace enrich_detail

// Materializes the typing triples the catalog's filtering shapes rely on:
// schema classes become rdfs:Class, schema properties become rdf:Property,
// schema-level instances become owl:NamedIndividual, and rdfs:Datatype
// terms are additionally rdfs:Class (entailment rule rdfs11). The result
// is the union of the data graph and all schema graphs plus those typings;
// blank nodes of distinct inputs are renamed apart. Idempotent.
inline std::pair<Graph, EnrichmentReport> enrich(
    const Graph& data, const std::vector<Graph>& schemas) {
  EnrichmentReport report;
  Graph out;
  out.absorb(data, "");
  size_t before = out.size();
  Graph schema_union;
  for (size_t i = 0; i < schemas.size(); ++i) {
    std::string suffix = "_s" + std::to_string(i);
    out.absorb(schemas[i], suffix);
    schema_union.absorb(schemas[i], suffix);
  }
  report.merged_schema_triples = out.size() - before;

  const Term type = Term::iri(vocab::rdf::type);
  const Term rdfs_class = Term::iri(vocab::rdfs::Class);
  const Term rdf_property = Term::iri(vocab::rdf::Property);
  const Term named_individual = Term::iri(vocab::owl::NamedIndividual);

  // Collect the typing triples first and batch-insert at the end: probing
  // a graph re-indexes it after any insert, so interleaving reads and
  // writes is quadratic on large graphs.
  std::set<rdf::Triple> additions;
  auto add = [&](const Term& s, const Term& o, size_t& counter) {
    if (out.contains(s, type, o)) return;
    if (additions.insert(rdf::Triple{s, type, o}).second) ++counter;
  };

  // Class promotions: owl:Class and rdfs:Datatype carry rdfs:Class.
  for (const auto& t :
       schema_union.match(std::nullopt, type, Term::iri(vocab::owl::Class), true))
    add(t.subject, rdfs_class, report.added_class_typings);
  for (const auto& t : schema_union.match(std::nullopt, type,
                                          Term::iri(vocab::rdfs::Datatype), true))
    add(t.subject, rdfs_class, report.added_class_typings);

  // Property promotions: every OWL property flavor, plus every subject of
  // an rdfs:domain / rdfs:range axiom.
  for (const auto& cls : enrich_detail::owl_property_classes()) {
    for (const auto& t :
         schema_union.match(std::nullopt, type, Term::iri(cls), true))
      add(t.subject, rdf_property, report.added_property_typings);
  }
  for (const auto& p : {vocab::rdfs::domain, vocab::rdfs::range}) {
    for (const auto& t :
         schema_union.match(std::nullopt, Term::iri(p), std::nullopt, true))
      add(t.subject, rdf_property, report.added_property_typings);
  }

  // Named-individual promotion: schema-level instances of schema-defined
  // classes that are not themselves classes or properties.
  std::set<Term> schema_classes;
  for (const auto& cls :
       {vocab::owl::Class, vocab::rdfs::Class, vocab::rdfs::Datatype}) {
    for (const auto& t :
         schema_union.match(std::nullopt, type, Term::iri(cls), true))
      schema_classes.insert(t.subject);
  }
  auto is_class_or_property = [&](const Term& s) {
    if (schema_classes.count(s)) return true;
    if (schema_union.contains(s, type, rdf_property)) return true;
    for (const auto& cls : enrich_detail::owl_property_classes())
      if (schema_union.contains(s, type, Term::iri(cls))) return true;
    return false;
  };
  for (const auto& t : schema_union.match(std::nullopt, type, std::nullopt, true)) {
    if (!schema_classes.count(t.object)) continue;
    if (is_class_or_property(t.subject)) continue;
    add(t.subject, named_individual, report.added_named_individual_typings);
  }

  for (const auto& t : additions) out.insert(t);
  return {std::move(out), std::move(report)};
}

// The schema-only artifact: union of the schema graphs with the same
// typing rules applied, used to validate class/property-level shapes.
inline Graph enrich_schemas(const std::vector<Graph>& schemas) {
  return enrich(Graph{}, schemas).first;
}

}  // namespace dqa
