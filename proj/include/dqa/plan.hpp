#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dqa/instantiate.hpp"
#include "dqa/profile.hpp"

namespace dqa {

struct SkipNote {
  std::string template_id;
  std::string reason;
};

struct Plan {
  std::vector<InstantiatedShape> shapes;
  std::vector<SkipNote> skipped;
};

namespace plan_detail {

using catalog::ShapeTemplate;
using catalog::Source;

// Coerces one JSON domain-knowledge value onto a placeholder kind.
inline BoundValue coerce(const catalog::PlaceholderSpec& spec,
                         const nlohmann::json& v,
                         const std::string& template_id) {
  using catalog::PlaceholderKind;
  auto term_of = [&](const nlohmann::json& x) -> Term {
    if (x.is_string()) {
      const std::string s = x.get<std::string>();
      if (spec.kind == PlaceholderKind::Iri) return Term::iri(s);
      // Term lists accept both IRIs and literals; angle brackets or a
      // scheme mark an IRI.
      if (s.size() > 1 && s.front() == '<' && s.back() == '>')
        return Term::iri(s.substr(1, s.size() - 2));
      if (spec.kind == PlaceholderKind::TermList &&
          config_detail::looks_like_iri(s))
        return Term::iri(s);
      if (spec.kind == PlaceholderKind::Date)
        return Term::literal(s, vocab::xsd::date);
      return Term::plain(s);
    }
    if (x.is_number_integer())
      return Term::literal(std::to_string(x.get<int64_t>()),
                           vocab::xsd::integer);
    if (x.is_number_float()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%g", x.get<double>());
      return Term::literal(buf, vocab::xsd::decimal);
    }
    if (x.is_boolean())
      return Term::literal(x.get<bool>() ? "true" : "false",
                           vocab::xsd::boolean);
    if (x.is_object()) {
      if (x.contains("iri")) return Term::iri(x.at("iri").get<std::string>());
      std::string value = x.at("value").get<std::string>();
      if (x.contains("lang"))
        return Term::lang_literal(value, x.at("lang").get<std::string>());
      if (x.contains("datatype")) {
        std::string dt = x.at("datatype").get<std::string>();
        if (dt.rfind("xsd:", 0) == 0) dt = vocab::XSD + dt.substr(4);
        return Term::literal(value, dt);
      }
      return Term::plain(value);
    }
    throw InstantiationError("domain_knowledge." + template_id + "." +
                             spec.name + ": unsupported JSON value");
  };

  switch (spec.kind) {
    case PlaceholderKind::Integer:
      if (!v.is_number_integer())
        throw InstantiationError("domain_knowledge." + template_id + "." +
                                 spec.name + " must be an integer");
      return v.get<int64_t>();
    case PlaceholderKind::Regex:
      if (!v.is_string())
        throw InstantiationError("domain_knowledge." + template_id + "." +
                                 spec.name + " must be a string");
      return v.get<std::string>();
    case PlaceholderKind::TermList: {
      if (!v.is_array())
        throw InstantiationError("domain_knowledge." + template_id + "." +
                                 spec.name + " must be an array");
      std::vector<Term> list;
      for (const auto& item : v) list.push_back(term_of(item));
      return list;
    }
    default:
      return term_of(v);
  }
}

inline Bindings bindings_from_json(const ShapeTemplate& tmpl,
                                   const nlohmann::json& obj) {
  Bindings b;
  for (const auto& [key, value] : obj.items()) {
    const auto* spec = tmpl.placeholder(key);
    if (!spec)
      throw InstantiationError("domain_knowledge." + tmpl.id +
                               ": template has no placeholder " + key);
    b.values[key] = coerce(*spec, value, tmpl.id);
  }
  return b;
}

}  // namespace plan_detail

// Produces the run's concrete shape set by applying the catalog's
// selection rules to the profile, configuration and available artifacts.
inline Plan plan(const ProfileSummary& profile, const Config& cfg,
                 bool have_metadata, bool have_schema) {
  using catalog::Source;
  Plan out;

  auto enabled = [&](const catalog::ShapeTemplate& t) {
    auto it = cfg.enabled_shapes.find(t.id);
    if (it != cfg.enabled_shapes.end()) return it->second;
    return t.enabled_by_default;
  };

  auto skip = [&](const catalog::ShapeTemplate& t, const std::string& why) {
    out.skipped.push_back({t.id, why});
  };

  auto emit = [&](const catalog::ShapeTemplate& t, const Bindings& b,
                  const std::string& variant = "") {
    out.shapes.push_back(instantiate(t, b, cfg, variant));
  };

  auto used_property = [&](const std::string& p) {
    return profile.used_properties.count(p) > 0;
  };

  for (const auto& t : catalog::all_templates()) {
    // Manual templates are triggered by domain-knowledge bindings; their
    // enabled-by-default flag is false by construction. Automatic templates
    // honor the flag plus any per-template override.
    if (t.source == Source::Manual) {
      auto it = cfg.enabled_shapes.find(t.id);
      if (it != cfg.enabled_shapes.end() && !it->second) {
        skip(t, "disabled");
        continue;
      }
    } else if (!enabled(t)) {
      skip(t, "disabled");
      continue;
    }
    if (t.artifact == catalog::Artifact::MetadataGraph && !have_metadata) {
      skip(t, "no metadata graph");
      continue;
    }
    if (t.artifact == catalog::Artifact::SchemaGraph && !have_schema) {
      skip(t, "no schema graph");
      continue;
    }

    if (t.source == Source::Manual) {
      auto it = cfg.domain_knowledge.find(t.id);
      if (it == cfg.domain_knowledge.end()) {
        skip(t, "no domain-knowledge bindings");
        continue;
      }
      for (const auto& obj : it->second)
        emit(t, plan_detail::bindings_from_json(t, obj));
      continue;
    }

    // Automatic templates.
    if (t.id == "I2") {
      if (!cfg.dataset_base_iri) {
        skip(t, "no dataset base IRI configured");
        continue;
      }
      emit(t, Bindings{}.iri("DATASET_URI", *cfg.dataset_base_iri));
    } else if (t.id == "U3b") {
      if (!profile.metadata.uri_regex_patterns.empty()) {
        emit(t,
             Bindings{}.regex("URI_REGEX_PATTERN",
                              profile.metadata.uri_regex_patterns.front()),
             "regex");
      } else if (!profile.metadata.uri_spaces.empty()) {
        emit(t,
             Bindings{}.iri("URI_SPACE", profile.metadata.uri_spaces.front()),
             "space");
      } else {
        skip(t, "metadata declares neither uriRegexPattern nor uriSpace");
      }
    } else if (t.id == "RC1a") {
      emit(t, Bindings{}.integer("LENGTH_VALUE", cfg.uri_length_threshold));
    } else if (t.id == "SV3") {
      size_t n = 0;
      for (const auto& [p, datatypes] : profile.datatype_range_properties) {
        if (!used_property(p)) continue;
        for (const auto& dt : datatypes) {
          emit(t, Bindings{}.iri("PROPERTY_URI", p).iri("DATATYPE_URI", dt));
          ++n;
        }
      }
      if (n == 0) skip(t, "no datatype-range property used in the data");
    } else if (t.id == "CN1") {
      size_t n = 0;
      for (const auto& [a, b] : profile.declared.disjoint_pairs) {
        if (!profile.used_classes.count(a) || !profile.used_classes.count(b))
          continue;
        // One shape per ordered pair, both directions.
        emit(t, Bindings{}.iri("CLASS_URI", a).iri("DISJOINT_CLASS_URI", b));
        emit(t, Bindings{}.iri("CLASS_URI", b).iri("DISJOINT_CLASS_URI", a));
        n += 2;
      }
      if (n == 0) skip(t, "no disjoint class pair used in the data");
    } else if (t.id == "CN2a") {
      // All schema properties: misused ones never show up in profiling.
      if (profile.declared.schema_properties.empty()) {
        skip(t, "schema declares no properties");
        continue;
      }
      for (const auto& p : profile.declared.schema_properties)
        emit(t, Bindings{}.iri("PROPERTY_URI", p));
    } else if (t.id == "CN2b") {
      if (profile.declared.schema_classes.empty()) {
        skip(t, "schema declares no classes");
        continue;
      }
      for (const auto& c : profile.declared.schema_classes)
        emit(t, Bindings{}.iri("CLASS_URI", c));
    } else if (t.id == "CN3a" || t.id == "CN3b") {
      const auto& declared = t.id == "CN3a"
                                 ? profile.declared.datatype_properties
                                 : profile.declared.object_properties;
      size_t n = 0;
      for (const auto& p : declared) {
        if (!used_property(p)) continue;
        emit(t, Bindings{}.iri("PROPERTY_URI", p));
        ++n;
      }
      if (n == 0) skip(t, "no declared property of this kind used");
    } else if (t.id == "CN4a") {
      if (profile.declared.deprecated_classes.empty()) {
        skip(t, "no deprecated classes declared");
        continue;
      }
      std::vector<Term> classes;
      for (const auto& c : profile.declared.deprecated_classes)
        classes.push_back(Term::iri(c));
      emit(t, Bindings{}.list("CLASSES_LIST", classes));
    } else if (t.id == "CN4b") {
      if (profile.declared.deprecated_properties.empty()) {
        skip(t, "no deprecated properties declared");
        continue;
      }
      for (const auto& p : profile.declared.deprecated_properties)
        emit(t, Bindings{}.iri("PROPERTY_URI", p));
    } else if (t.id == "CN5") {
      size_t n = 0;
      for (const auto& p : profile.declared.inverse_functional) {
        if (!used_property(p)) continue;
        emit(t, Bindings{}.iri("PROPERTY_URI", p));
        ++n;
      }
      if (n == 0) skip(t, "no inverse-functional property used");
    } else if (t.id == "CN9-domain") {
      size_t n = 0;
      for (const auto& [p, domains] : profile.domain_properties) {
        if (!used_property(p)) continue;
        for (const auto& d : domains) {
          if (d.thing) {
            emit(t, Bindings{}.iri("PROPERTY_URI", p), "thing");
          } else {
            emit(t, Bindings{}.iri("PROPERTY_URI", p).iri("CLASS", d.iri));
          }
          ++n;
        }
      }
      if (n == 0) skip(t, "no property with a declared domain used");
    } else if (t.id == "CN9-range") {
      size_t n = 0;
      for (const auto& [p, ranges] : profile.range_properties) {
        if (!used_property(p)) continue;
        for (const auto& r : ranges) {
          Bindings b = Bindings{}.iri("PROPERTY_URI", p);
          switch (r.kind) {
            case RangeSpec::Kind::Datatype:
              emit(t, b.iri("DATATYPE", r.iri));
              break;
            case RangeSpec::Kind::Class:
              emit(t, b.iri("CLASS", r.iri), "class");
              break;
            case RangeSpec::Kind::LiteralAny:
              emit(t, b, "literal");
              break;
            case RangeSpec::Kind::ThingAny:
              emit(t, b, "thing");
              break;
            case RangeSpec::Kind::ResourceAny:
              emit(t, b, "resource");
              break;
          }
          ++n;
        }
      }
      if (n == 0) skip(t, "no property with a declared range used");
    } else if (t.id == "CN10a" || t.id == "CN10b" || t.id == "CN10c") {
      const auto& declared = t.id == "CN10a"   ? profile.declared.irreflexive
                             : t.id == "CN10b" ? profile.declared.functional
                                               : profile.declared.asymmetric;
      size_t n = 0;
      for (const auto& p : declared) {
        if (!used_property(p)) continue;
        emit(t, Bindings{}.iri("PROPERTY_URI", p));
        ++n;
      }
      if (n == 0) skip(t, "no declared property of this kind used");
    } else if (t.id == "CP1") {
      if (profile.declared.schema_classes.empty()) {
        skip(t, "schema declares no classes");
        continue;
      }
      for (const auto& c : profile.declared.schema_classes)
        emit(t, Bindings{}.iri("CLASS_URI", c));
    } else if (t.id == "ITP1b") {
      if (profile.used_properties.empty()) {
        skip(t, "no properties used in the data");
        continue;
      }
      for (const auto& p : profile.used_properties)
        emit(t, Bindings{}.iri("PROPERTY_URI", p));
    } else if (t.id == "ITP3a") {
      if (profile.used_classes.empty()) {
        skip(t, "no classes used in the data");
        continue;
      }
      for (const auto& c : profile.used_classes)
        emit(t, Bindings{}.iri("CLASS_URI", c));
    } else if (t.id == "ITP3b") {
      for (const auto& p : profile.used_properties)
        emit(t, Bindings{}.iri("PROPERTY_URI", p));
      if (profile.used_properties.empty())
        skip(t, "no properties used in the data");
    } else {
      // Config-only singletons (entity-level and metadata shapes).
      emit(t, Bindings{});
    }
  }

  std::sort(out.shapes.begin(), out.shapes.end(),
            [](const InstantiatedShape& a, const InstantiatedShape& b) {
              return std::tie(a.template_id, a.shape_id) <
                     std::tie(b.template_id, b.shape_id);
            });
  std::sort(out.skipped.begin(), out.skipped.end(),
            [](const SkipNote& a, const SkipNote& b) {
              return std::tie(a.template_id, a.reason) <
                     std::tie(b.template_id, b.reason);
            });
  return out;
}

}  // namespace dqa
