#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <tuple>

#include "dqa/rdf/vocab.hpp"

namespace dqa::rdf {

enum class TermKind : uint8_t { Iri, BlankNode, Literal };

// An RDF term. IRIs are stored absolute (the parser resolves relative
// references against the document base). Literal language tags are
// normalized to lowercase; a literal carries a language tag only when its
// datatype is rdf:langString.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;     // IRI string, blank node label, or lexical form
  std::string datatype;  // literal datatype IRI (empty otherwise)
  std::string language;  // lowercase BCP-47 tag (langString literals only)

  static Term iri(std::string v) {
    Term t;
    t.kind = TermKind::Iri;
    t.value = std::move(v);
    return t;
  }

  static Term blank(std::string label) {
    Term t;
    t.kind = TermKind::BlankNode;
    t.value = std::move(label);
    return t;
  }

  static Term literal(std::string lexical, std::string datatype_iri) {
    Term t;
    t.kind = TermKind::Literal;
    t.value = std::move(lexical);
    t.datatype = std::move(datatype_iri);
    return t;
  }

  static Term lang_literal(std::string lexical, std::string tag) {
    Term t;
    t.kind = TermKind::Literal;
    t.value = std::move(lexical);
    t.datatype = vocab::rdf::langString;
    std::transform(tag.begin(), tag.end(), tag.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    t.language = std::move(tag);
    return t;
  }

  // Plain literal, datatype xsd:string.
  static Term plain(std::string lexical) {
    return literal(std::move(lexical), vocab::xsd::string_);
  }

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::BlankNode; }
  bool is_literal() const { return kind == TermKind::Literal; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.value == b.value && a.datatype == b.datatype &&
           a.language == b.language;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b) {
    return std::tie(a.kind, a.value, a.datatype, a.language) <
           std::tie(b.kind, b.value, b.datatype, b.language);
  }
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.subject == b.subject && a.predicate == b.predicate &&
           a.object == b.object;
  }
  friend bool operator<(const Triple& a, const Triple& b) {
    return std::tie(a.subject, a.predicate, a.object) <
           std::tie(b.subject, b.predicate, b.object);
  }
};

struct TermHash {
  size_t operator()(const Term& t) const {
    size_t h = std::hash<std::string>()(t.value);
    h = h * 31 + std::hash<std::string>()(t.datatype);
    h = h * 31 + std::hash<std::string>()(t.language);
    h = h * 31 + static_cast<size_t>(t.kind);
    return h;
  }
};

}  // namespace dqa::rdf
