#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dqa/rdf/graph.hpp"
#include "dqa/rdf/ntriples.hpp"
#include "dqa/shacl/ast.hpp"

namespace dqa::shacl {

struct ShapesGraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace io_detail {

inline const std::string& SH = vocab::SH;

inline Term sh(const std::string& local) { return Term::iri(SH + local); }

// The sh: predicates this engine understands. Any other sh: predicate on a
// shape is an unsupported feature and is rejected at load time.
inline const std::set<std::string>& supported_predicates() {
  static const std::set<std::string> s = {
      "path",          "minCount",     "maxCount",   "class",
      "datatype",      "nodeKind",     "hasValue",   "in",
      "pattern",       "flags",        "minInclusive",
      "maxInclusive",  "maxLength",    "languageIn", "uniqueLang",
      "equals",        "disjoint",     "not",        "and",
      "or",            "node",         "property",
      "qualifiedValueShape",           "qualifiedMinCount",
      "targetClass",   "targetNode",   "targetSubjectsOf",
      "targetObjectsOf"};
  return s;
}

}  // namespace io_detail

// Reads SHACL shape definitions out of an RDF graph into the engine's AST.
// Only the catalog's component subset is accepted; sh:xone, property pair
// comparisons other than equals/disjoint, sh:closed, severity overrides and
// every SPARQL-based feature are load-time errors, as are recursive shape
// references.
class ShapesReader {
 public:
  explicit ShapesReader(const rdf::Graph& g) : g_(g) {}

  std::vector<RootShape> read_targeted_shapes() {
    std::vector<RootShape> out;
    std::vector<Term> roots;
    for (const char* target :
         {"targetClass", "targetNode", "targetSubjectsOf", "targetObjectsOf"}) {
      for (const auto& t :
           g_.match(std::nullopt, io_detail::sh(target), std::nullopt, true))
        roots.push_back(t.subject);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& node : roots) {
      RootShape root;
      root.id = node.is_iri() ? node.value : "_:" + node.value;
      root.shape = parse_shape(node);
      for (const auto& [local, kind] :
           std::vector<std::pair<std::string, TargetKind>>{
               {"targetClass", TargetKind::Class},
               {"targetNode", TargetKind::Node},
               {"targetSubjectsOf", TargetKind::SubjectsOf},
               {"targetObjectsOf", TargetKind::ObjectsOf}}) {
        for (const auto& t : g_.match(node, io_detail::sh(local), std::nullopt,
                                      true))
          root.targets.push_back({kind, t.object});
      }
      out.push_back(std::move(root));
    }
    return out;
  }

  Shape parse_shape(const Term& node) {
    if (visiting_.count(node))
      throw ShapesGraphError("recursive shape reference at " +
                             rdf::to_ntriples(node));
    visiting_.insert(node);
    Shape s;
    if (node.is_iri()) s.name = node.value;

    auto props = g_.match(node, std::nullopt, std::nullopt, true);
    // Validate predicate support first.
    for (const auto& t : props) {
      const std::string& p = t.predicate.value;
      if (p.rfind(io_detail::SH, 0) == 0) {
        std::string local = p.substr(io_detail::SH.size());
        if (!io_detail::supported_predicates().count(local))
          throw ShapesGraphError("unsupported SHACL feature sh:" + local +
                                 " on " + rdf::to_ntriples(node));
      }
    }

    for (const auto& t : props) {
      const Term& p = t.predicate;
      const Term& o = t.object;
      if (p.value.rfind(io_detail::SH, 0) != 0) continue;
      std::string local = p.value.substr(io_detail::SH.size());

      if (local == "path") {
        s.path = parse_path(o);
      } else if (local == "minCount") {
        s.constraints.push_back(build::min_count(to_int(o)));
      } else if (local == "maxCount") {
        s.constraints.push_back(build::max_count(to_int(o)));
      } else if (local == "maxLength") {
        s.constraints.push_back(build::max_length(to_int(o)));
      } else if (local == "class") {
        s.constraints.push_back(build::class_of(o));
      } else if (local == "datatype") {
        s.constraints.push_back(build::datatype(o));
      } else if (local == "nodeKind") {
        s.constraints.push_back(build::node_kind(parse_node_kind(o)));
      } else if (local == "hasValue") {
        s.constraints.push_back(build::has_value(o));
      } else if (local == "in") {
        s.constraints.push_back(build::in_list(parse_list(o)));
      } else if (local == "pattern") {
        auto flags = g_.match(node, io_detail::sh("flags"), std::nullopt);
        s.constraints.push_back(build::pattern(
            o.value, flags.empty() ? "" : flags[0].object.value));
      } else if (local == "flags") {
        // consumed together with sh:pattern
      } else if (local == "minInclusive") {
        s.constraints.push_back(build::min_inclusive(o));
      } else if (local == "maxInclusive") {
        s.constraints.push_back(build::max_inclusive(o));
      } else if (local == "languageIn") {
        std::vector<std::string> tags;
        for (const auto& item : parse_list(o)) tags.push_back(item.value);
        s.constraints.push_back(build::language_in(tags));
      } else if (local == "uniqueLang") {
        if (o.value == "true")
          s.constraints.push_back(build::unique_lang());
      } else if (local == "equals") {
        s.constraints.push_back(build::equals(o));
      } else if (local == "disjoint") {
        s.constraints.push_back(build::disjoint(o));
      } else if (local == "not") {
        s.constraints.push_back(build::not_shape(parse_shape(o)));
      } else if (local == "and" || local == "or") {
        std::vector<Shape> inner;
        for (const auto& item : parse_list(o)) inner.push_back(parse_shape(item));
        s.constraints.push_back(local == "and"
                                    ? build::and_shapes(std::move(inner))
                                    : build::or_shapes(std::move(inner)));
      } else if (local == "node") {
        s.constraints.push_back(build::node(parse_shape(o)));
      } else if (local == "property") {
        Shape ps = parse_shape(o);
        if (!ps.path)
          throw ShapesGraphError("sh:property value lacks sh:path at " +
                                 rdf::to_ntriples(o));
        s.constraints.push_back(build::property(std::move(ps)));
      } else if (local == "qualifiedValueShape") {
        auto qmin =
            g_.match(node, io_detail::sh("qualifiedMinCount"), std::nullopt);
        if (qmin.empty())
          throw ShapesGraphError(
              "sh:qualifiedValueShape without sh:qualifiedMinCount at " +
              rdf::to_ntriples(node));
        s.constraints.push_back(
            build::qualified(parse_shape(o), to_int(qmin[0].object)));
      } else if (local == "qualifiedMinCount") {
        // consumed with qualifiedValueShape
      }
    }
    visiting_.erase(node);
    return s;
  }

  Path parse_path(const Term& node) {
    if (node.is_iri()) {
      if (node.value == vocab::rdf::nil)
        throw ShapesGraphError("empty sequence path");
      return Path::pred(node);
    }
    // Blank node: either an RDF list (sequence) or a unary path operator.
    auto first = g_.match(node, Term::iri(vocab::rdf::first), std::nullopt);
    if (!first.empty()) {
      std::vector<Path> steps;
      for (const auto& item : parse_list(node)) steps.push_back(parse_path(item));
      if (steps.size() < 2)
        throw ShapesGraphError("sequence path needs at least two steps");
      return Path::sequence(std::move(steps));
    }
    auto inv = g_.match(node, io_detail::sh("inversePath"), std::nullopt);
    if (!inv.empty()) return Path::inverse(parse_path(inv[0].object));
    // The published property is sh:oneOrMorePath; the plural spelling is
    // accepted as an alias.
    for (const char* name : {"oneOrMorePath", "oneOrMorePaths"}) {
      auto one = g_.match(node, io_detail::sh(name), std::nullopt);
      if (!one.empty()) return Path::one_or_more(parse_path(one[0].object));
    }
    for (const char* name :
         {"zeroOrMorePath", "zeroOrOnePath", "alternativePath"}) {
      if (!g_.match(node, io_detail::sh(name), std::nullopt).empty())
        throw ShapesGraphError(std::string("unsupported path kind sh:") + name);
    }
    throw ShapesGraphError("unrecognized path node " + rdf::to_ntriples(node));
  }

  std::vector<Term> parse_list(const Term& head) {
    std::vector<Term> out;
    Term cur = head;
    while (!(cur.is_iri() && cur.value == vocab::rdf::nil)) {
      auto first = g_.match(cur, Term::iri(vocab::rdf::first), std::nullopt);
      auto rest = g_.match(cur, Term::iri(vocab::rdf::rest), std::nullopt);
      if (first.empty() || rest.empty())
        throw ShapesGraphError("malformed RDF list at " + rdf::to_ntriples(cur));
      out.push_back(first[0].object);
      cur = rest[0].object;
      if (out.size() > 100000)
        throw ShapesGraphError("RDF list does not terminate");
    }
    return out;
  }

 private:
  int64_t to_int(const Term& t) {
    if (!t.is_literal())
      throw ShapesGraphError("expected integer literal, got " +
                             rdf::to_ntriples(t));
    try {
      return std::stoll(t.value);
    } catch (...) {
      throw ShapesGraphError("not an integer: " + t.value);
    }
  }

  NodeKindValue parse_node_kind(const Term& t) {
    std::string local = t.value.rfind(io_detail::SH, 0) == 0
                            ? t.value.substr(io_detail::SH.size())
                            : t.value;
    if (local == "IRI") return NodeKindValue::IRI;
    if (local == "BlankNode") return NodeKindValue::BlankNode;
    if (local == "Literal") return NodeKindValue::Literal;
    // The paper prints sh:BlankNodeOrIri in one listing; accept both
    // casings.
    if (local == "BlankNodeOrIRI" || local == "BlankNodeOrIri")
      return NodeKindValue::BlankNodeOrIRI;
    if (local == "BlankNodeOrLiteral") return NodeKindValue::BlankNodeOrLiteral;
    if (local == "IRIOrLiteral") return NodeKindValue::IRIOrLiteral;
    throw ShapesGraphError("unknown node kind " + rdf::to_ntriples(t));
  }

  const rdf::Graph& g_;
  std::set<Term> visiting_;
};

inline std::vector<RootShape> read_shapes(const rdf::Graph& g) {
  return ShapesReader(g).read_targeted_shapes();
}

// ---- rendering (AST -> Turtle) --------------------------------------------

class TurtleWriter {
 public:
  TurtleWriter() {
    prefixes_ = {
        {"rdf", vocab::RDF},        {"rdfs", vocab::RDFS},
        {"owl", vocab::OWL},        {"xsd", vocab::XSD},
        {"sh", vocab::SH},          {"void", vocab::VOID},
        {"dcat", vocab::DCAT},      {"dcterms", vocab::DCTERMS},
        {"foaf", vocab::FOAF},      {"prov", vocab::PROV},
        {"sec", vocab::SEC},        {"ex", vocab::EX},
    };
  }

  std::string write(const std::vector<RootShape>& shapes) {
    body_.clear();
    done_named_.clear();
    for (const auto& root : shapes) write_root(root);
    std::string out;
    for (const auto& [pfx, iri] : prefixes_)
      out += "@prefix " + pfx + ": <" + iri + "> .\n";
    out += "\n" + body_;
    return out;
  }

  std::string term(const Term& t) const {
    if (t.is_iri()) {
      for (const auto& [pfx, iri] : prefixes_) {
        if (t.value.rfind(iri, 0) == 0) {
          std::string local = t.value.substr(iri.size());
          if (!local.empty() && local.find_first_of("/#:?[]@() .,;") ==
                                    std::string::npos)
            return pfx + ":" + local;
        }
      }
      return rdf::to_ntriples(t);
    }
    return rdf::to_ntriples(t);
  }

 private:
  void write_root(const RootShape& root) {
    // Named sub-shapes (sh:node references) are emitted first, once.
    emit_named_subshapes(root.shape);
    std::string name = root.shape.name.empty()
                           ? "_:shape" + std::to_string(anon_++)
                           : term(Term::iri(root.shape.name));
    body_ += name + " a sh:NodeShape ;\n";
    for (const auto& t : root.targets) {
      const char* p = t.kind == TargetKind::Class        ? "sh:targetClass"
                      : t.kind == TargetKind::Node       ? "sh:targetNode"
                      : t.kind == TargetKind::SubjectsOf ? "sh:targetSubjectsOf"
                                                         : "sh:targetObjectsOf";
      body_ += std::string("  ") + p + " " + term(t.term) + " ;\n";
    }
    write_constraints(root.shape.constraints, 1);
    // Replace the trailing " ;\n" with " .\n"
    if (body_.size() >= 2 && body_[body_.size() - 2] == ';') {
      body_.erase(body_.size() - 2);
      body_ += ".\n\n";
    }
  }

  void emit_named_subshapes(const Shape& s) {
    for (const auto& c : s.constraints) {
      for (const auto& inner : c.shapes) {
        if (c.component == Component::Node && !inner.name.empty() &&
            !done_named_.count(inner.name)) {
          done_named_.insert(inner.name);
          std::string saved = std::move(body_);
          body_.clear();
          RootShape aux;
          aux.shape = inner;
          write_root(aux);
          std::string rendered = std::move(body_);
          body_ = std::move(saved);
          body_ += rendered;
        }
        emit_named_subshapes(inner);
      }
    }
  }

  void indent(int depth) { body_.append(depth * 2, ' '); }

  void write_constraints(const std::vector<Constraint>& cs, int depth) {
    for (const auto& c : cs) {
      indent(depth);
      write_constraint(c, depth);
      body_ += " ;\n";
    }
  }

  void write_shape_inline(const Shape& s, int depth) {
    body_ += "[\n";
    if (s.path) {
      indent(depth + 1);
      body_ += "sh:path " + path(*s.path) + " ;\n";
    }
    write_constraints(s.constraints, depth + 1);
    // Drop trailing " ;\n" inside brackets.
    if (body_.size() >= 2 && body_[body_.size() - 2] == ';') {
      body_.erase(body_.size() - 2);
      body_ += "\n";
    }
    indent(depth);
    body_ += "]";
  }

  void write_constraint(const Constraint& c, int depth) {
    switch (c.component) {
      case Component::MinCount:
        body_ += "sh:minCount " + std::to_string(c.int_param);
        break;
      case Component::MaxCount:
        body_ += "sh:maxCount " + std::to_string(c.int_param);
        break;
      case Component::MaxLength:
        body_ += "sh:maxLength " + std::to_string(c.int_param);
        break;
      case Component::Class:
        body_ += "sh:class " + term(c.term_param);
        break;
      case Component::Datatype:
        body_ += "sh:datatype " + term(c.term_param);
        break;
      case Component::NodeKind:
        body_ += std::string("sh:nodeKind sh:") + node_kind_name(c.node_kind);
        break;
      case Component::HasValue:
        body_ += "sh:hasValue " + term(c.term_param);
        break;
      case Component::In: {
        body_ += "sh:in (";
        for (const auto& v : c.list_param) body_ += " " + term(v);
        body_ += " )";
        break;
      }
      case Component::Pattern:
        body_ += "sh:pattern " + rdf::to_ntriples(Term::plain(c.pattern));
        if (!c.flags.empty())
          body_ += " ;\n" + std::string(depth * 2, ' ') + "sh:flags \"" +
                   c.flags + "\"";
        break;
      case Component::MinInclusive:
        body_ += "sh:minInclusive " + term(c.term_param);
        break;
      case Component::MaxInclusive:
        body_ += "sh:maxInclusive " + term(c.term_param);
        break;
      case Component::LanguageIn: {
        body_ += "sh:languageIn (";
        for (const auto& v : c.list_param)
          body_ += " " + rdf::to_ntriples(Term::plain(v.value));
        body_ += " )";
        break;
      }
      case Component::UniqueLang:
        body_ += "sh:uniqueLang true";
        break;
      case Component::Equals:
        body_ += "sh:equals " + term(c.other_property);
        break;
      case Component::Disjoint:
        body_ += "sh:disjoint " + term(c.other_property);
        break;
      case Component::Not:
        body_ += "sh:not ";
        write_shape_inline(c.shapes[0], depth);
        break;
      case Component::And:
      case Component::Or: {
        body_ += c.component == Component::And ? "sh:and (\n" : "sh:or (\n";
        for (const auto& inner : c.shapes) {
          indent(depth + 1);
          write_shape_inline(inner, depth + 1);
          body_ += "\n";
        }
        indent(depth);
        body_ += ")";
        break;
      }
      case Component::Node:
        if (!c.shapes[0].name.empty()) {
          body_ += "sh:node " + term(Term::iri(c.shapes[0].name));
        } else {
          body_ += "sh:node ";
          write_shape_inline(c.shapes[0], depth);
        }
        break;
      case Component::Property:
        body_ += "sh:property ";
        write_shape_inline(c.shapes[0], depth);
        break;
      case Component::QualifiedValueShape:
        body_ += "sh:qualifiedValueShape ";
        if (!c.shapes[0].name.empty()) {
          body_ += term(Term::iri(c.shapes[0].name));
        } else {
          write_shape_inline(c.shapes[0], depth);
        }
        body_ += " ;\n";
        indent(depth);
        body_ += "sh:qualifiedMinCount " + std::to_string(c.qualified_min);
        break;
    }
  }

  std::string path(const Path& p) const {
    switch (p.kind) {
      case Path::Kind::Predicate:
        return term(p.predicate);
      case Path::Kind::Inverse:
        return "[ sh:inversePath " + path(p.children[0]) + " ]";
      case Path::Kind::OneOrMore:
        return "[ sh:oneOrMorePath " + path(p.children[0]) + " ]";
      case Path::Kind::Sequence: {
        std::string out = "(";
        for (const auto& step : p.children) out += " " + path(step);
        return out + " )";
      }
    }
    return "";
  }

  std::map<std::string, std::string> prefixes_;
  std::string body_;
  std::set<std::string> done_named_;
  size_t anon_ = 0;
};

inline std::string write_shapes_turtle(const std::vector<RootShape>& shapes) {
  TurtleWriter w;
  return w.write(shapes);
}

}  // namespace dqa::shacl
