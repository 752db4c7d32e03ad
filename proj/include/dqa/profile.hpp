#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dqa/config.hpp"
#include "dqa/rdf/graph.hpp"

namespace dqa {

using rdf::Graph;
using rdf::Term;

// Classification of a declared rdfs:range, which selects the range-check
// variant to instantiate.
struct RangeSpec {
  enum class Kind { Datatype, Class, LiteralAny, ThingAny, ResourceAny };
  Kind kind;
  std::string iri;  // datatype or class IRI (empty for the *Any kinds)

  friend bool operator<(const RangeSpec& a, const RangeSpec& b) {
    return std::tie(a.kind, a.iri) < std::tie(b.kind, b.iri);
  }
  friend bool operator==(const RangeSpec& a, const RangeSpec& b) {
    return a.kind == b.kind && a.iri == b.iri;
  }
};

struct DomainSpec {
  bool thing = false;   // owl:Thing domain
  std::string iri;      // class IRI when !thing

  friend bool operator<(const DomainSpec& a, const DomainSpec& b) {
    return std::tie(a.thing, a.iri) < std::tie(b.thing, b.iri);
  }
};

struct DeclaredInventories {
  std::set<std::string> inverse_functional;
  std::set<std::string> functional;
  std::set<std::string> irreflexive;
  std::set<std::string> asymmetric;
  std::set<std::string> datatype_properties;
  std::set<std::string> object_properties;
  std::set<std::string> deprecated_classes;
  std::set<std::string> deprecated_properties;
  std::set<std::pair<std::string, std::string>> disjoint_pairs;  // canonical a<b
  std::set<std::string> schema_classes;
  std::set<std::string> schema_properties;
};

struct MetadataFlags {
  bool has_void_dataset = false;
  bool has_dcat_dataset = false;
  std::vector<std::string> uri_regex_patterns;
  std::vector<std::string> uri_spaces;
};

// Everything shape instantiation and measure denominators need, extracted
// in one deterministic pass over the artifacts.
struct ProfileSummary {
  std::set<rdf::Term> entity_set;
  size_t entity_count = 0;
  size_t triple_count = 0;
  size_t entities_with_label = 0;
  size_t entities_with_description = 0;
  size_t entities_with_interlink = 0;
  std::set<std::string> used_classes;     // rdf:type objects in the data graph
  std::set<std::string> used_properties;  // predicates of the data graph
  std::map<std::string, size_t> subjects_per_property;
  std::map<std::string, std::vector<std::string>> datatype_range_properties;
  std::map<std::string, std::vector<DomainSpec>> domain_properties;
  std::map<std::string, std::vector<RangeSpec>> range_properties;
  DeclaredInventories declared;
  MetadataFlags metadata;

  bool is_entity(const rdf::Term& t) const { return entity_set.count(t) > 0; }
};

namespace profile_detail {

inline bool is_datatype_iri(const std::string& iri,
                            const std::set<std::string>& declared_datatypes) {
  if (iri.rfind(vocab::XSD, 0) == 0) return true;
  if (iri == vocab::rdf::langString || iri == vocab::rdf::HTML ||
      iri == vocab::rdf::XMLLiteral)
    return true;
  return declared_datatypes.count(iri) > 0;
}

}  // namespace profile_detail

// Profiles the enriched data graph plus its source artifacts. The raw
// (pre-enrichment) data graph scopes "used in the dataset": instantiating
// per-term shapes from the merged graph would drag schema-internal terms
// into the data-quality measures.
inline ProfileSummary profile(const Graph& enriched, const Graph& raw_data,
                              const Graph& schema, const Graph* metadata,
                              const Config& cfg) {
  ProfileSummary out;
  const Term type_prop = Term::iri(cfg.type_property);
  const Term type = Term::iri(vocab::rdf::type);

  out.triple_count = raw_data.size();

  // Entities: typed subjects of the data graph that are not classes,
  // properties, or named individuals after enrichment.
  auto excluded = [&](const Term& s) {
    return enriched.contains(s, type, Term::iri(vocab::rdfs::Class)) ||
           enriched.contains(s, type, Term::iri(vocab::rdf::Property)) ||
           enriched.contains(s, type, Term::iri(vocab::owl::NamedIndividual));
  };
  for (const auto& t : raw_data.match(std::nullopt, type_prop, std::nullopt)) {
    if (excluded(t.subject)) continue;
    out.entity_set.insert(t.subject);
  }
  out.entity_count = out.entity_set.size();

  auto has_value = [&](const Term& s, const std::string& p) {
    bool found = false;
    auto pid = enriched.find(Term::iri(p));
    auto sid = enriched.find(s);
    if (pid && sid)
      enriched.for_each(*sid, *pid, std::nullopt,
                        [&](const rdf::TripleIds&) {
                          found = true;
                          return false;
                        });
    return found;
  };
  for (const auto& e : out.entity_set) {
    if (has_value(e, cfg.label_property)) ++out.entities_with_label;
    if (has_value(e, cfg.comment_property)) ++out.entities_with_description;
    if (has_value(e, cfg.sameas_property)) ++out.entities_with_interlink;
  }

  // Usage inventories come from the raw data graph.
  for (const auto& t : raw_data.match(std::nullopt, type_prop, std::nullopt)) {
    if (t.object.is_iri()) out.used_classes.insert(t.object.value);
  }
  raw_data.for_each(std::nullopt, std::nullopt, std::nullopt,
                    [&](const rdf::TripleIds& t) {
                      out.used_properties.insert(raw_data.term(t.p).value);
                      return true;
                    });
  for (const auto& p : out.used_properties) {
    auto pid = enriched.find(Term::iri(p));
    size_t n = 0;
    if (pid) n = enriched.subjects_of(*pid).size();
    out.subjects_per_property[p] = n;
  }

  // Declared inventories from the enriched schema artifact.
  auto collect = [&](const std::string& cls, std::set<std::string>& into) {
    for (const auto& t : schema.match(std::nullopt, type, Term::iri(cls))) {
      if (t.subject.is_iri()) into.insert(t.subject.value);
    }
  };
  collect(vocab::owl::InverseFunctionalProperty,
          out.declared.inverse_functional);
  collect(vocab::owl::FunctionalProperty, out.declared.functional);
  collect(vocab::owl::IrreflexiveProperty, out.declared.irreflexive);
  collect(vocab::owl::AsymmetricProperty, out.declared.asymmetric);
  collect(vocab::owl::DatatypeProperty, out.declared.datatype_properties);
  collect(vocab::owl::ObjectProperty, out.declared.object_properties);
  collect(vocab::owl::DeprecatedClass, out.declared.deprecated_classes);
  collect(vocab::owl::DeprecatedProperty, out.declared.deprecated_properties);
  collect(vocab::rdfs::Class, out.declared.schema_classes);
  collect(vocab::rdf::Property, out.declared.schema_properties);

  for (const auto& t : schema.match(std::nullopt,
                                    Term::iri(vocab::owl::disjointWith),
                                    std::nullopt)) {
    if (!t.subject.is_iri() || !t.object.is_iri()) continue;
    std::string a = t.subject.value, b = t.object.value;
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    out.declared.disjoint_pairs.insert({a, b});
  }

  // Domain and range declarations.
  std::set<std::string> declared_datatypes;
  for (const auto& t : schema.match(std::nullopt, type,
                                    Term::iri(vocab::rdfs::Datatype))) {
    if (t.subject.is_iri()) declared_datatypes.insert(t.subject.value);
  }
  for (const auto& t :
       schema.match(std::nullopt, Term::iri(vocab::rdfs::domain), std::nullopt)) {
    if (!t.subject.is_iri() || !t.object.is_iri()) continue;
    DomainSpec spec;
    if (t.object.value == vocab::owl::Thing) {
      spec.thing = true;
    } else {
      spec.iri = t.object.value;
    }
    auto& list = out.domain_properties[t.subject.value];
    if (std::find_if(list.begin(), list.end(), [&](const DomainSpec& d) {
          return d.thing == spec.thing && d.iri == spec.iri;
        }) == list.end())
      list.push_back(spec);
  }
  for (const auto& t :
       schema.match(std::nullopt, Term::iri(vocab::rdfs::range), std::nullopt)) {
    if (!t.subject.is_iri() || !t.object.is_iri()) continue;
    RangeSpec spec;
    const std::string& r = t.object.value;
    if (r == vocab::owl::Thing) {
      spec.kind = RangeSpec::Kind::ThingAny;
    } else if (r == vocab::rdfs::Literal) {
      spec.kind = RangeSpec::Kind::LiteralAny;
    } else if (r == vocab::rdfs::Resource) {
      spec.kind = RangeSpec::Kind::ResourceAny;
    } else if (profile_detail::is_datatype_iri(r, declared_datatypes)) {
      spec.kind = RangeSpec::Kind::Datatype;
      spec.iri = r;
    } else {
      spec.kind = RangeSpec::Kind::Class;
      spec.iri = r;
    }
    auto& list = out.range_properties[t.subject.value];
    if (std::find(list.begin(), list.end(), spec) == list.end())
      list.push_back(spec);
    if (spec.kind == RangeSpec::Kind::Datatype) {
      auto& dts = out.datatype_range_properties[t.subject.value];
      if (std::find(dts.begin(), dts.end(), r) == dts.end()) dts.push_back(r);
    }
  }
  // Deterministic variant order per property.
  for (auto& [p, list] : out.range_properties)
    std::sort(list.begin(), list.end());
  for (auto& [p, list] : out.domain_properties)
    std::sort(list.begin(), list.end());
  for (auto& [p, list] : out.datatype_range_properties)
    std::sort(list.begin(), list.end());

  // Metadata presence flags.
  if (metadata) {
    out.metadata.has_void_dataset =
        !metadata->match(std::nullopt, type, Term::iri(vocab::void_::Dataset))
             .empty();
    out.metadata.has_dcat_dataset =
        !metadata->match(std::nullopt, type, Term::iri(vocab::dcat::Dataset))
             .empty();
    for (const auto& t : metadata->match(
             std::nullopt, Term::iri(vocab::void_::uriRegexPattern),
             std::nullopt, true)) {
      if (t.object.is_literal())
        out.metadata.uri_regex_patterns.push_back(t.object.value);
    }
    for (const auto& t : metadata->match(std::nullopt,
                                         Term::iri(vocab::void_::uriSpace),
                                         std::nullopt, true)) {
      if (t.object.is_literal())
        out.metadata.uri_spaces.push_back(t.object.value);
    }
  }
  return out;
}

}  // namespace dqa
