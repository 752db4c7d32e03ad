#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include "dqa/rdf/term.hpp"

namespace dqa::rdf {

// N-Triples escaping for literal lexical forms and IRIs. Non-ASCII bytes
// pass through as UTF-8 (N-Triples 1.1).
inline void nt_escape_into(std::string& out, std::string_view s,
                           bool is_iri) {
  for (unsigned char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '"':
        if (is_iri) out += '"'; else out += "\\\"";
        break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

// Canonical N-Triples rendering of a term. This string is the toolkit's
// deterministic sort key for terms.
inline std::string to_ntriples(const Term& t) {
  std::string out;
  switch (t.kind) {
    case TermKind::Iri:
      out += '<';
      nt_escape_into(out, t.value, true);
      out += '>';
      break;
    case TermKind::BlankNode:
      out += "_:";
      out += t.value;
      break;
    case TermKind::Literal:
      out += '"';
      nt_escape_into(out, t.value, false);
      out += '"';
      if (!t.language.empty()) {
        out += '@';
        out += t.language;
      } else if (t.datatype != vocab::xsd::string_) {
        out += "^^<";
        nt_escape_into(out, t.datatype, true);
        out += '>';
      }
      break;
  }
  return out;
}

inline std::string to_ntriples(const Triple& t) {
  return to_ntriples(t.subject) + " " + to_ntriples(t.predicate) + " " +
         to_ntriples(t.object) + " .";
}

}  // namespace dqa::rdf
