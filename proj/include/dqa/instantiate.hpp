#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dqa/catalog.hpp"
#include "dqa/config.hpp"
#include "dqa/profile.hpp"
#include "dqa/shacl/ast.hpp"
#include "dqa/shacl/shapes_io.hpp"

namespace dqa {

struct InstantiationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bound placeholder value.
using BoundValue = std::variant<Term, std::vector<Term>, int64_t, std::string>;

struct Bindings {
  std::map<std::string, BoundValue> values;

  Bindings& iri(const std::string& name, const std::string& v) {
    values[name] = Term::iri(v);
    return *this;
  }
  Bindings& term(const std::string& name, Term v) {
    values[name] = std::move(v);
    return *this;
  }
  Bindings& integer(const std::string& name, int64_t v) {
    values[name] = v;
    return *this;
  }
  Bindings& regex(const std::string& name, const std::string& v) {
    values[name] = v;
    return *this;
  }
  Bindings& list(const std::string& name, std::vector<Term> v) {
    values[name] = std::move(v);
    return *this;
  }
  bool has(const std::string& name) const { return values.count(name) > 0; }
};

struct InstantiatedShape {
  std::string shape_id;     // template id + ":" + binding digest
  std::string template_id;
  std::string variant;      // variant key, empty for the primary body
  catalog::Artifact artifact;
  Bindings bindings;
  shacl::RootShape root;
};

namespace inst_detail {

using catalog::PlaceholderKind;
using catalog::ShapeTemplate;
using shacl::Constraint;
using shacl::Path;
using shacl::Shape;

inline std::string regex_escape(const std::string& s) {
  static const std::string special = "\\^$.|?*+()[]{}";
  std::string out;
  for (char c : s) {
    if (special.find(c) != std::string::npos) out += '\\';
    out += c;
  }
  return out;
}

inline std::optional<std::string> placeholder_name(const Term& t) {
  if (t.is_iri() && t.value.rfind(catalog::ph_ns::placeholder, 0) == 0)
    return t.value.substr(catalog::ph_ns::placeholder.size());
  return std::nullopt;
}

struct Substituter {
  const ShapeTemplate& tmpl;
  const Bindings& bindings;
  const Config& cfg;

  const BoundValue& lookup(const std::string& name) const {
    auto it = bindings.values.find(name);
    if (it == bindings.values.end())
      throw InstantiationError("template " + tmpl.id +
                               ": missing binding for placeholder " + name);
    return it->second;
  }

  Term resolve_config_slot(const std::string& iri) const {
    std::string slot = iri.substr(catalog::ph_ns::config.size());
    if (slot == "TYPE_PROPERTY") return Term::iri(cfg.type_property);
    if (slot == "LABEL_PROPERTY") return Term::iri(cfg.label_property);
    if (slot == "COMMENT_PROPERTY") return Term::iri(cfg.comment_property);
    if (slot == "SAMEAS_PROPERTY") return Term::iri(cfg.sameas_property);
    throw InstantiationError("unknown config slot " + iri);
  }

  Term substitute_term(const Term& t) const {
    if (t.is_iri() && t.value.rfind(catalog::ph_ns::config, 0) == 0)
      return resolve_config_slot(t.value);
    if (auto name = placeholder_name(t)) {
      const auto* spec = tmpl.placeholder(*name);
      if (!spec)
        throw InstantiationError("template " + tmpl.id +
                                 " has no placeholder " + *name);
      const BoundValue& v = lookup(*name);
      if (!std::holds_alternative<Term>(v))
        throw InstantiationError("placeholder " + *name + " of template " +
                                 tmpl.id + " expects a single term");
      const Term& bound = std::get<Term>(v);
      if (spec->kind == PlaceholderKind::Iri && !bound.is_iri())
        throw InstantiationError("placeholder " + *name + " of template " +
                                 tmpl.id + " expects an IRI");
      return bound;
    }
    // Literal-position placeholders render as their bare token.
    if (t.is_literal() && t.datatype == vocab::xsd::string_ &&
        tmpl.placeholder(t.value)) {
      const BoundValue& v = lookup(t.value);
      if (!std::holds_alternative<Term>(v))
        throw InstantiationError("placeholder " + t.value + " of template " +
                                 tmpl.id + " expects a single term");
      return std::get<Term>(v);
    }
    return t;
  }

  std::vector<Term> substitute_list(const std::vector<Term>& list) const {
    std::vector<Term> out;
    for (const auto& item : list) {
      std::optional<std::string> name = placeholder_name(item);
      if (!name && item.is_literal() && tmpl.placeholder(item.value))
        name = item.value;
      if (name && tmpl.placeholder(*name) &&
          tmpl.placeholder(*name)->kind == PlaceholderKind::TermList) {
        const BoundValue& v = lookup(*name);
        if (!std::holds_alternative<std::vector<Term>>(v))
          throw InstantiationError("placeholder " + *name + " of template " +
                                   tmpl.id + " expects a term list");
        for (const auto& t : std::get<std::vector<Term>>(v)) out.push_back(t);
      } else {
        out.push_back(substitute_term(item));
      }
    }
    return out;
  }

  std::string substitute_pattern(const std::string& pattern) const {
    std::string out = pattern;
    for (const auto& spec : tmpl.placeholders) {
      auto pos = out.find(spec.name);
      if (pos == std::string::npos) continue;
      const BoundValue& v = lookup(spec.name);
      std::string replacement;
      if (std::holds_alternative<std::string>(v)) {
        replacement = std::get<std::string>(v);
        if (spec.kind != PlaceholderKind::Regex)
          replacement = regex_escape(replacement);
      } else if (std::holds_alternative<Term>(v)) {
        replacement = std::get<Term>(v).value;
        if (spec.kind != PlaceholderKind::Regex)
          replacement = regex_escape(replacement);
      } else {
        throw InstantiationError("placeholder " + spec.name +
                                 " cannot be spliced into a pattern");
      }
      out = out.substr(0, pos) + replacement + out.substr(pos + spec.name.size());
    }
    return out;
  }

  Path substitute_path(const Path& p) const {
    Path out = p;
    if (p.kind == Path::Kind::Predicate) {
      out.predicate = substitute_term(p.predicate);
      if (!out.predicate.is_iri())
        throw InstantiationError("path predicate must be an IRI in template " +
                                 tmpl.id);
    }
    out.children.clear();
    for (const auto& child : p.children)
      out.children.push_back(substitute_path(child));
    return out;
  }

  Constraint substitute_constraint(const Constraint& c) const {
    Constraint out = c;
    if (!c.int_placeholder.empty()) {
      const BoundValue& v = lookup(c.int_placeholder);
      if (!std::holds_alternative<int64_t>(v))
        throw InstantiationError("placeholder " + c.int_placeholder +
                                 " of template " + tmpl.id +
                                 " expects an integer");
      out.int_param = std::get<int64_t>(v);
      out.int_placeholder.clear();
    }
    out.term_param = substitute_term(c.term_param);
    out.other_property = substitute_term(c.other_property);
    out.list_param = substitute_list(c.list_param);
    if (c.component == shacl::Component::Pattern)
      out.pattern = substitute_pattern(c.pattern);
    out.shapes.clear();
    for (const auto& s : c.shapes) out.shapes.push_back(substitute_shape(s));
    return out;
  }

  Shape substitute_shape(const Shape& s) const {
    Shape out;
    out.name = s.name;
    if (s.path) out.path = substitute_path(*s.path);
    for (const auto& c : s.constraints)
      out.constraints.push_back(substitute_constraint(c));
    return out;
  }
};

// CN7 builds its or/and branch lists from the bound property lists; the
// catalog body carries one placeholder branch in each arm.
inline Shape build_cn7(const ShapeTemplate& tmpl, const Bindings& b,
                       const Config& cfg) {
  using namespace shacl::build;
  auto get_list = [&](const std::string& name) {
    auto it = b.values.find(name);
    if (it == b.values.end() ||
        !std::holds_alternative<std::vector<Term>>(it->second))
      throw InstantiationError("template CN7 requires term list " + name);
    return std::get<std::vector<Term>>(it->second);
  };
  auto branch = [&](const Term& prop) {
    return property_shape(Path::pred(prop), {min_count(0)});
  };
  std::vector<Shape> a_branches, b_branches;
  for (const auto& p : get_list("PROPERTY_LIST_A")) a_branches.push_back(branch(p));
  for (const auto& p : get_list("PROPERTY_LIST_B")) b_branches.push_back(branch(p));
  if (a_branches.empty() || b_branches.empty())
    throw InstantiationError("template CN7 requires non-empty property lists");
  (void)cfg;
  Shape out = node_shape({or_shapes(
      {node_shape({or_shapes(std::move(a_branches))}),
       node_shape({and_shapes(std::move(b_branches))})})});
  out.name = tmpl.body.name;
  return out;
}

}  // namespace inst_detail

// Binds a template (or one of its variants) into a validatable shape.
inline InstantiatedShape instantiate(const catalog::ShapeTemplate& tmpl,
                                     const Bindings& bindings,
                                     const Config& cfg,
                                     const std::string& variant = "") {
  inst_detail::Substituter sub{tmpl, bindings, cfg};
  InstantiatedShape out;
  out.template_id = tmpl.id;
  out.variant = variant;
  out.artifact = tmpl.artifact;
  out.bindings = bindings;

  const shacl::Shape* body = &tmpl.body;
  if (!variant.empty()) {
    auto it = tmpl.variants.find(variant);
    if (it == tmpl.variants.end())
      throw InstantiationError("template " + tmpl.id + " has no variant " +
                               variant);
    body = &it->second;
  }
  if (tmpl.id == "CN7") {
    out.root.shape = inst_detail::build_cn7(tmpl, bindings, cfg);
    // CLASS_URI still substitutes into the target below.
  } else {
    out.root.shape = sub.substitute_shape(*body);
  }
  for (const auto& t : tmpl.targets) {
    shacl::Target bound = t;
    bound.term = sub.substitute_term(t.term);
    out.root.targets.push_back(bound);
  }

  std::string canon = shacl::canonical_string(out.root.shape);
  for (const auto& t : out.root.targets)
    canon += "|" + std::to_string(static_cast<int>(t.kind)) +
             rdf::to_ntriples(t.term);
  canon += "|" + variant;
  out.shape_id = tmpl.id + ":" + shacl::digest(canon);
  out.root.id = out.shape_id;
  return out;
}

// Turtle rendering of a bound template, used by golden tests and
// --emit-shapes.
inline std::string render_template(const catalog::ShapeTemplate& tmpl,
                                   const Bindings& bindings, const Config& cfg,
                                   const std::string& variant = "") {
  auto inst = instantiate(tmpl, bindings, cfg, variant);
  inst.root.shape.name = tmpl.body.name;  // keep the paper's shape name
  return shacl::write_shapes_turtle({inst.root});
}

}  // namespace dqa
