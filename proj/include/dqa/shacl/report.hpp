#pragma once

#include <string>

#include "json.hpp"

#include "dqa/rdf/ntriples.hpp"
#include "dqa/shacl/engine.hpp"

namespace dqa::shacl {

using nlohmann::json;

inline json term_to_json(const Term& t) {
  json out;
  switch (t.kind) {
    case rdf::TermKind::Iri:
      out["type"] = "iri";
      out["value"] = t.value;
      break;
    case rdf::TermKind::BlankNode:
      out["type"] = "blank";
      out["value"] = t.value;
      break;
    case rdf::TermKind::Literal:
      out["type"] = "literal";
      out["value"] = t.value;
      out["datatype"] = t.datatype;
      if (!t.language.empty()) out["language"] = t.language;
      break;
  }
  return out;
}

inline json report_to_json(const ValidationReport& report) {
  json out;
  out["conforms"] = report.conforms;
  out["results"] = json::array();
  for (const auto& r : report.results) {
    json item;
    item["focusNode"] = term_to_json(r.focus);
    if (r.result_path) item["resultPath"] = r.result_path->str();
    if (r.value) item["value"] = term_to_json(*r.value);
    item["sourceShape"] = r.source_shape_id;
    item["sourceConstraintComponent"] = component_name(r.component);
    item["severity"] = "Violation";
    item["message"] = r.message;
    out["results"].push_back(std::move(item));
  }
  json counts = json::object();
  for (const auto& [id, n] : report.per_shape_counts) counts[id] = n;
  out["resultCountsByShape"] = std::move(counts);
  if (!report.errors.empty()) {
    out["shapeErrors"] = json::array();
    for (const auto& e : report.errors)
      out["shapeErrors"].push_back({{"shape", e.shape_id},
                                    {"message", e.message}});
  }
  return out;
}

// Serializes the report with the RDF validation-report vocabulary
// (sh:ValidationReport / sh:ValidationResult).
inline std::string report_to_turtle(const ValidationReport& report) {
  std::string out;
  out += "@prefix sh: <" + vocab::SH + "> .\n";
  out += "@prefix xsd: <" + vocab::XSD + "> .\n\n";
  out += "[] a sh:ValidationReport ;\n";
  out += std::string("  sh:conforms ") +
         (report.conforms ? "true" : "false");
  auto path_turtle = [](const Path& p) {
    // Render structurally, matching the shapes writer.
    struct R {
      static std::string path(const Path& p) {
        switch (p.kind) {
          case Path::Kind::Predicate:
            return rdf::to_ntriples(p.predicate);
          case Path::Kind::Inverse:
            return "[ sh:inversePath " + path(p.children[0]) + " ]";
          case Path::Kind::OneOrMore:
            return "[ sh:oneOrMorePath " + path(p.children[0]) + " ]";
          case Path::Kind::Sequence: {
            std::string out = "(";
            for (const auto& s : p.children) out += " " + path(s);
            return out + " )";
          }
        }
        return "";
      }
    };
    return R::path(p);
  };
  for (const auto& r : report.results) {
    out += " ;\n  sh:result [\n    a sh:ValidationResult ;\n";
    out += "    sh:resultSeverity sh:Violation ;\n";
    out += "    sh:focusNode " + rdf::to_ntriples(r.focus) + " ;\n";
    if (r.result_path)
      out += "    sh:resultPath " + path_turtle(*r.result_path) + " ;\n";
    if (r.value) out += "    sh:value " + rdf::to_ntriples(*r.value) + " ;\n";
    out += "    sh:sourceShape <urn:dqa:shape:" + r.source_shape_id + "> ;\n";
    out += "    sh:sourceConstraintComponent sh:" +
           std::string(component_name(r.component)) + " ;\n";
    out += "    sh:resultMessage " +
           rdf::to_ntriples(Term::plain(r.message)) + " ;\n  ]";
  }
  out += " .\n";
  return out;
}

}  // namespace dqa::shacl
