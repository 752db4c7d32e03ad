#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqa/rdf/ntriples.hpp"
#include "dqa/rdf/term.hpp"

namespace dqa::shacl {

using rdf::Term;

// The closed component set: exactly what the shape catalog needs. Anything
// else is rejected when a shapes graph is read.
enum class Component {
  MinCount,
  MaxCount,
  Class,
  Datatype,
  NodeKind,
  HasValue,
  In,
  Pattern,
  MinInclusive,
  MaxInclusive,
  MaxLength,
  LanguageIn,
  UniqueLang,
  Equals,
  Disjoint,
  Not,
  And,
  Or,
  Node,
  Property,
  QualifiedValueShape,
};

inline const char* component_name(Component c) {
  switch (c) {
    case Component::MinCount: return "MinCountConstraintComponent";
    case Component::MaxCount: return "MaxCountConstraintComponent";
    case Component::Class: return "ClassConstraintComponent";
    case Component::Datatype: return "DatatypeConstraintComponent";
    case Component::NodeKind: return "NodeKindConstraintComponent";
    case Component::HasValue: return "HasValueConstraintComponent";
    case Component::In: return "InConstraintComponent";
    case Component::Pattern: return "PatternConstraintComponent";
    case Component::MinInclusive: return "MinInclusiveConstraintComponent";
    case Component::MaxInclusive: return "MaxInclusiveConstraintComponent";
    case Component::MaxLength: return "MaxLengthConstraintComponent";
    case Component::LanguageIn: return "LanguageInConstraintComponent";
    case Component::UniqueLang: return "UniqueLangConstraintComponent";
    case Component::Equals: return "EqualsConstraintComponent";
    case Component::Disjoint: return "DisjointConstraintComponent";
    case Component::Not: return "NotConstraintComponent";
    case Component::And: return "AndConstraintComponent";
    case Component::Or: return "OrConstraintComponent";
    case Component::Node: return "NodeConstraintComponent";
    case Component::Property: return "PropertyConstraintComponent";
    case Component::QualifiedValueShape:
      return "QualifiedValueShapeConstraintComponent";
  }
  return "?";
}

enum class NodeKindValue {
  IRI,
  BlankNode,
  Literal,
  BlankNodeOrIRI,
  BlankNodeOrLiteral,
  IRIOrLiteral,
};

inline const char* node_kind_name(NodeKindValue k) {
  switch (k) {
    case NodeKindValue::IRI: return "IRI";
    case NodeKindValue::BlankNode: return "BlankNode";
    case NodeKindValue::Literal: return "Literal";
    case NodeKindValue::BlankNodeOrIRI: return "BlankNodeOrIRI";
    case NodeKindValue::BlankNodeOrLiteral: return "BlankNodeOrLiteral";
    case NodeKindValue::IRIOrLiteral: return "IRIOrLiteral";
  }
  return "?";
}

struct Path {
  enum class Kind { Predicate, Inverse, Sequence, OneOrMore };
  Kind kind = Kind::Predicate;
  Term predicate;               // Kind::Predicate only
  std::vector<Path> children;   // Inverse: 1, Sequence: >=2, OneOrMore: 1

  static Path pred(Term p) {
    Path out;
    out.kind = Kind::Predicate;
    out.predicate = std::move(p);
    return out;
  }
  static Path pred(std::string iri) { return pred(Term::iri(std::move(iri))); }
  static Path inverse(Path inner) {
    Path out;
    out.kind = Kind::Inverse;
    out.children.push_back(std::move(inner));
    return out;
  }
  static Path sequence(std::vector<Path> steps) {
    Path out;
    out.kind = Kind::Sequence;
    out.children = std::move(steps);
    return out;
  }
  static Path one_or_more(Path inner) {
    Path out;
    out.kind = Kind::OneOrMore;
    out.children.push_back(std::move(inner));
    return out;
  }

  // SPARQL property-path style rendering, used in messages and JSON.
  std::string str() const {
    switch (kind) {
      case Kind::Predicate: return rdf::to_ntriples(predicate);
      case Kind::Inverse: return "^" + children[0].str();
      case Kind::OneOrMore: return children[0].str() + "+";
      case Kind::Sequence: {
        std::string out;
        for (size_t i = 0; i < children.size(); ++i) {
          if (i) out += "/";
          out += children[i].str();
        }
        return out;
      }
    }
    return "";
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.kind == b.kind && a.predicate == b.predicate &&
           a.children == b.children;
  }
};

struct Shape;

struct Constraint {
  Component component;
  int64_t int_param = -1;               // counts and lengths
  Term term_param;                      // class/datatype/hasValue/min/max bounds
  NodeKindValue node_kind = NodeKindValue::IRI;
  std::vector<Term> list_param;         // in; languageIn holds plain literals
  std::string pattern;
  std::string flags;
  Term other_property;                  // equals / disjoint parameter
  std::vector<Shape> shapes;            // sub-shapes for logic components
  bool unique_lang = false;
  int64_t qualified_min = -1;

  // Placeholder hooks for catalog templates whose parameter is bound at
  // instantiation time but does not live in a Term position.
  std::string int_placeholder;          // e.g. LENGTH_VALUE, COUNT
  std::string pattern_placeholders;     // unused marker; pattern tokens stay inline
};

// A SHACL shape. A property shape has a path; a node shape does not.
// Constraints are an implicit conjunction.
struct Shape {
  std::string name;              // IRI when the shape is named, else empty
  std::optional<Path> path;
  std::vector<Constraint> constraints;

  bool is_property_shape() const { return path.has_value(); }
};

enum class TargetKind { Class, Node, SubjectsOf, ObjectsOf };

struct Target {
  TargetKind kind;
  Term term;
  friend bool operator==(const Target& a, const Target& b) {
    return a.kind == b.kind && a.term == b.term;
  }
};

// A validatable top-level shape: targets plus constraint tree.
struct RootShape {
  std::string id;        // run-unique id (template id + binding digest)
  Shape shape;
  std::vector<Target> targets;
};

namespace build {

inline Constraint min_count(int64_t n) {
  Constraint c;
  c.component = Component::MinCount;
  c.int_param = n;
  return c;
}
inline Constraint max_count(int64_t n) {
  Constraint c;
  c.component = Component::MaxCount;
  c.int_param = n;
  return c;
}
inline Constraint max_length(int64_t n) {
  Constraint c;
  c.component = Component::MaxLength;
  c.int_param = n;
  return c;
}
inline Constraint class_of(Term cls) {
  Constraint c;
  c.component = Component::Class;
  c.term_param = std::move(cls);
  return c;
}
inline Constraint datatype(Term dt) {
  Constraint c;
  c.component = Component::Datatype;
  c.term_param = std::move(dt);
  return c;
}
inline Constraint node_kind(NodeKindValue k) {
  Constraint c;
  c.component = Component::NodeKind;
  c.node_kind = k;
  return c;
}
inline Constraint has_value(Term v) {
  Constraint c;
  c.component = Component::HasValue;
  c.term_param = std::move(v);
  return c;
}
inline Constraint in_list(std::vector<Term> values) {
  Constraint c;
  c.component = Component::In;
  c.list_param = std::move(values);
  return c;
}
inline Constraint pattern(std::string re, std::string flags = "") {
  Constraint c;
  c.component = Component::Pattern;
  c.pattern = std::move(re);
  c.flags = std::move(flags);
  return c;
}
inline Constraint min_inclusive(Term bound) {
  Constraint c;
  c.component = Component::MinInclusive;
  c.term_param = std::move(bound);
  return c;
}
inline Constraint max_inclusive(Term bound) {
  Constraint c;
  c.component = Component::MaxInclusive;
  c.term_param = std::move(bound);
  return c;
}
inline Constraint language_in(std::vector<std::string> tags) {
  Constraint c;
  c.component = Component::LanguageIn;
  for (auto& t : tags) c.list_param.push_back(Term::plain(std::move(t)));
  return c;
}
inline Constraint unique_lang() {
  Constraint c;
  c.component = Component::UniqueLang;
  c.unique_lang = true;
  return c;
}
inline Constraint equals(Term property) {
  Constraint c;
  c.component = Component::Equals;
  c.other_property = std::move(property);
  return c;
}
inline Constraint disjoint(Term property) {
  Constraint c;
  c.component = Component::Disjoint;
  c.other_property = std::move(property);
  return c;
}
inline Constraint not_shape(Shape inner) {
  Constraint c;
  c.component = Component::Not;
  c.shapes.push_back(std::move(inner));
  return c;
}
inline Constraint and_shapes(std::vector<Shape> inner) {
  Constraint c;
  c.component = Component::And;
  c.shapes = std::move(inner);
  return c;
}
inline Constraint or_shapes(std::vector<Shape> inner) {
  Constraint c;
  c.component = Component::Or;
  c.shapes = std::move(inner);
  return c;
}
inline Constraint node(Shape inner) {
  Constraint c;
  c.component = Component::Node;
  c.shapes.push_back(std::move(inner));
  return c;
}
inline Constraint property(Shape property_shape) {
  Constraint c;
  c.component = Component::Property;
  c.shapes.push_back(std::move(property_shape));
  return c;
}
inline Constraint qualified(Shape inner, int64_t min) {
  Constraint c;
  c.component = Component::QualifiedValueShape;
  c.shapes.push_back(std::move(inner));
  c.qualified_min = min;
  return c;
}

inline Shape node_shape(std::vector<Constraint> cs, std::string name = "") {
  Shape s;
  s.name = std::move(name);
  s.constraints = std::move(cs);
  return s;
}
inline Shape property_shape(Path path, std::vector<Constraint> cs) {
  Shape s;
  s.path = std::move(path);
  s.constraints = std::move(cs);
  return s;
}

}  // namespace build

// Canonical serialization: stable under reordering of sibling constraints
// and of set-semantics lists (sh:in, sh:languageIn, sh:and, sh:or). Used
// for structural equality and binding digests.
inline std::string canonical_string(const Shape& s);

inline std::string canonical_string(const Constraint& c) {
  std::string out = "(";
  out += component_name(c.component);
  switch (c.component) {
    case Component::MinCount:
    case Component::MaxCount:
    case Component::MaxLength:
      out += " " + std::to_string(c.int_param);
      break;
    case Component::Class:
    case Component::Datatype:
    case Component::HasValue:
    case Component::MinInclusive:
    case Component::MaxInclusive:
      out += " " + rdf::to_ntriples(c.term_param);
      break;
    case Component::NodeKind:
      out += std::string(" ") + node_kind_name(c.node_kind);
      break;
    case Component::In:
    case Component::LanguageIn: {
      std::vector<std::string> items;
      for (const auto& t : c.list_param) items.push_back(rdf::to_ntriples(t));
      std::sort(items.begin(), items.end());
      for (const auto& i : items) out += " " + i;
      break;
    }
    case Component::Pattern:
      out += " " + c.pattern + " /" + c.flags;
      break;
    case Component::UniqueLang:
      out += " true";
      break;
    case Component::Equals:
    case Component::Disjoint:
      out += " " + rdf::to_ntriples(c.other_property);
      break;
    case Component::Not:
    case Component::Node:
      out += " " + canonical_string(c.shapes[0]);
      break;
    case Component::And:
    case Component::Or: {
      std::vector<std::string> items;
      for (const auto& s : c.shapes) items.push_back(canonical_string(s));
      std::sort(items.begin(), items.end());
      for (const auto& i : items) out += " " + i;
      break;
    }
    case Component::Property:
      out += " " + canonical_string(c.shapes[0]);
      break;
    case Component::QualifiedValueShape:
      out += " " + canonical_string(c.shapes[0]) + " min " +
             std::to_string(c.qualified_min);
      break;
  }
  out += ")";
  return out;
}

inline std::string canonical_string(const Shape& s) {
  std::string out = "[";
  if (!s.name.empty()) out += "<" + s.name + ">";
  if (s.path) out += "path " + s.path->str() + " ";
  std::vector<std::string> items;
  for (const auto& c : s.constraints) items.push_back(canonical_string(c));
  std::sort(items.begin(), items.end());
  for (const auto& i : items) out += i;
  out += "]";
  return out;
}

inline bool structurally_equal(const Shape& a, const Shape& b) {
  return canonical_string(a) == canonical_string(b);
}

// FNV-1a over the canonical rendering: the stable binding digest.
inline std::string digest(const std::string& text) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 16);
}

}  // namespace dqa::shacl
