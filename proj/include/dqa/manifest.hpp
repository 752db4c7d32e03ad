#pragma once

#include "json.hpp"

#include "dqa/instantiate.hpp"

namespace dqa {

namespace manifest_detail {

inline const char* kind_name(catalog::MeasureKind k) {
  switch (k) {
    case catalog::MeasureKind::Binary: return "binary";
    case catalog::MeasureKind::Ratio: return "ratio";
    case catalog::MeasureKind::Composite: return "composite";
    case catalog::MeasureKind::ReportOnly: return "report-only";
  }
  return "?";
}

inline const char* source_name(catalog::Source s) {
  switch (s) {
    case catalog::Source::AutoProfile: return "automatic-profile";
    case catalog::Source::AutoConfig: return "automatic-config";
    case catalog::Source::Manual: return "manual-domain-knowledge";
  }
  return "?";
}

inline const char* kind_name(catalog::PlaceholderKind k) {
  switch (k) {
    case catalog::PlaceholderKind::Iri: return "iri";
    case catalog::PlaceholderKind::Literal: return "literal";
    case catalog::PlaceholderKind::Integer: return "integer";
    case catalog::PlaceholderKind::Date: return "date";
    case catalog::PlaceholderKind::Regex: return "regex";
    case catalog::PlaceholderKind::TermList: return "term-list";
  }
  return "?";
}

// Canonical sample bindings so every template body can be rendered.
inline Bindings sample_bindings(const catalog::ShapeTemplate& t) {
  Bindings b;
  for (const auto& p : t.placeholders) {
    switch (p.kind) {
      case catalog::PlaceholderKind::Iri:
        b.iri(p.name, vocab::EX + p.name);
        break;
      case catalog::PlaceholderKind::Literal:
      case catalog::PlaceholderKind::Date:
        b.term(p.name, Term::plain(p.name));
        break;
      case catalog::PlaceholderKind::Integer:
        b.integer(p.name, p.name == "LENGTH_VALUE" ? 80 : 1);
        break;
      case catalog::PlaceholderKind::Regex:
        b.regex(p.name, p.name);
        break;
      case catalog::PlaceholderKind::TermList:
        b.list(p.name, {Term::iri(vocab::EX + p.name)});
        break;
    }
  }
  return b;
}

}  // namespace manifest_detail

// The machine-readable catalog description the repository documentation is
// generated from.
inline nlohmann::json catalog_manifest() {
  using namespace manifest_detail;
  nlohmann::json out = nlohmann::json::array();
  Config defaults;
  for (const auto& t : catalog::all_templates()) {
    nlohmann::json item;
    item["id"] = t.id;
    item["group"] = t.group;
    item["dimension"] = t.dimension;
    item["listing"] = t.listing_caption;
    item["shape_name"] = t.shape_name;
    item["artifact"] = t.artifact == catalog::Artifact::DataGraph ? "data-graph"
                       : t.artifact == catalog::Artifact::SchemaGraph
                           ? "schema-graph"
                           : "metadata-graph";
    item["instantiation_source"] = source_name(t.source);
    item["enabled_by_default"] = t.enabled_by_default;
    item["placeholders"] = nlohmann::json::array();
    for (const auto& p : t.placeholders)
      item["placeholders"].push_back(
          {{"name", p.name}, {"kind", kind_name(p.kind)}});
    item["metrics"] = nlohmann::json::array();
    for (const auto& m : t.metrics)
      item["metrics"].push_back(
          {{"id", m.metric_id}, {"kind", kind_name(m.kind)}});
    item["turtle"] = render_template(t, sample_bindings(t), defaults);
    if (!t.variants.empty()) {
      item["variants"] = nlohmann::json::array();
      for (const auto& [key, body] : t.variants)
        item["variants"].push_back(key);
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace dqa
