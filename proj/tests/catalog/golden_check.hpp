#pragma once

// Shared golden-file fidelity check: bind a template with canonical sample
// values, render it to Turtle, parse it back, and compare structurally
// against the hand-transcribed listing.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dqa/instantiate.hpp"
#include "dqa/rdf/turtle.hpp"
#include "dqa/shacl/shapes_io.hpp"

namespace dqa::goldencheck {

struct Outcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline rdf::Term exterm(const std::string& local) {
  return rdf::Term::iri(vocab::EX + local);
}

// Canonical golden bindings: IRI placeholders bind to ex:<NAME>, literal
// and regex placeholders to their bare token, counts to documented sample
// values; templates whose listing prints concrete example values bind
// those exact values.
inline Bindings golden_bindings(const catalog::ShapeTemplate& t) {
  using rdf::Term;
  if (t.id == "SA3a") {
    return Bindings{}
        .term("ENTITY_URI", exterm("Person1"))
        .list("LIST_ALLOWED_VALUES", {Term::lang_literal("Person 1", "en"),
                                      Term::lang_literal("Persona 1", "es")});
  }
  if (t.id == "SA3b") {
    return Bindings{}
        .term("ENTITY_URI", exterm("Person1"))
        .list("LIST_ALLOWED_VALUES", {exterm("Person"), exterm("Human")});
  }
  if (t.id == "R2") {
    return Bindings{}
        .term("CLASS_URI", exterm("Person"))
        .term("PROPERTY_URI_1", exterm("firstName"))
        .term("PROPERTY_URI_2", exterm("lastName"));
  }
  if (t.id == "ITO1") {
    return Bindings{}
        .iri("CLASS_URI", vocab::FOAF + "Person")
        .iri("PROPERTY_URI_1", vocab::FOAF + "givenName")
        .iri("PROPERTY_URI_2", vocab::FOAF + "familyName");
  }
  if (t.id == "CP3a") {
    return Bindings{}
        .term("ENTITY_URI", exterm("Germany"))
        .term("PROPERTY_URI", exterm("hasState"))
        .integer("COUNT", 16)
        .list("LIST_ALLOWED_VALUES", {exterm("Berlin"), exterm("Bavaria")});
  }
  if (t.id == "CP3b") {
    return Bindings{}
        .term("CLASS_URI", exterm("StatesOfGermany"))
        .integer("COUNT", 16)
        .list("LIST_ALLOWED_VALUES", {exterm("Berlin"), exterm("Bavaria")});
  }
  if (t.id == "CN7") {
    return Bindings{}
        .term("CLASS_URI", exterm("CLASS_URI"))
        .list("PROPERTY_LIST_A", {exterm("A_1"), exterm("A_n")})
        .list("PROPERTY_LIST_B", {exterm("B_1"), exterm("B_m")});
  }
  Bindings b;
  for (const auto& p : t.placeholders) {
    switch (p.kind) {
      case catalog::PlaceholderKind::Iri:
        b.term(p.name, exterm(p.name));
        break;
      case catalog::PlaceholderKind::Literal:
      case catalog::PlaceholderKind::Date:
        b.term(p.name, rdf::Term::plain(p.name));
        break;
      case catalog::PlaceholderKind::Integer:
        b.integer(p.name, p.name == "LENGTH_VALUE" ? 80 : 16);
        break;
      case catalog::PlaceholderKind::Regex:
        b.regex(p.name, p.name);
        break;
      case catalog::PlaceholderKind::TermList:
        b.list(p.name, {p.name == "REQUIRED_LANGUAGES"
                            ? rdf::Term::plain(p.name)
                            : exterm(p.name)});
        break;
    }
  }
  if (t.id == "I2") b.term("DATASET_URI", rdf::Term::iri("DATASET_URI"));
  if (t.id == "U3b") b.term("URI_SPACE", rdf::Term::iri("URI_SPACE"));
  return b;
}

inline Outcome check_one(const catalog::ShapeTemplate& t,
                         const std::string& variant,
                         const std::string& golden_dir) {
  Outcome out;
  out.name = variant.empty() ? t.id : t.id + "." + variant;
  std::string path = golden_dir + "/" + out.name + ".ttl";
  std::string golden_text = read_file(path);
  if (golden_text.empty()) {
    out.detail = "missing golden file " + path;
    return out;
  }
  try {
    auto golden_shapes = shacl::read_shapes(rdf::load_graph(golden_text));
    if (golden_shapes.size() != 1) {
      out.detail = "golden file must define exactly one targeted shape";
      return out;
    }
    Config defaults;
    std::string rendered =
        render_template(t, golden_bindings(t), defaults, variant);
    auto rendered_shapes = shacl::read_shapes(rdf::load_graph(rendered));
    if (rendered_shapes.size() != 1) {
      out.detail = "rendering did not produce exactly one targeted shape";
      return out;
    }
    if (shacl::canonical_string(rendered_shapes[0].shape) !=
        shacl::canonical_string(golden_shapes[0].shape)) {
      out.detail = "constraint tree mismatch\n--- rendered ---\n" + rendered +
                   "--- golden ---\n" + golden_text;
      return out;
    }
    if (!(rendered_shapes[0].targets == golden_shapes[0].targets)) {
      out.detail = "target mismatch";
      return out;
    }
  } catch (const std::exception& e) {
    out.detail = e.what();
    return out;
  }
  out.passed = true;
  return out;
}

// All 64 templates plus the four CN9 variant listings.
inline std::vector<Outcome> check_all(const std::string& golden_dir) {
  std::vector<Outcome> out;
  for (const auto& t : catalog::all_templates())
    out.push_back(check_one(t, "", golden_dir));
  const auto* dom = catalog::find_template("CN9-domain");
  const auto* rng = catalog::find_template("CN9-range");
  out.push_back(check_one(*dom, "thing", golden_dir));
  out.push_back(check_one(*rng, "thing", golden_dir));
  out.push_back(check_one(*rng, "literal", golden_dir));
  out.push_back(check_one(*rng, "resource", golden_dir));
  return out;
}

}  // namespace dqa::goldencheck
