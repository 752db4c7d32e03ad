#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dqa/rdf/term.hpp"
#include "dqa/shacl/ast.hpp"

// The shape-template catalog: one entry per shape of the DQ catalog, with
// the metadata needed to instantiate it (placeholders, selection source)
// and to turn its validation results into measures (metric ids, measure
// kind, denominator).
namespace dqa::catalog {

using rdf::Term;
using shacl::Shape;
using shacl::Target;
using shacl::TargetKind;

enum class MeasureKind { Binary, Ratio, Composite, ReportOnly };
enum class Source { AutoProfile, AutoConfig, Manual };
enum class Artifact { DataGraph, SchemaGraph, MetadataGraph };

// Denominator source for ratio measures.
enum class Denominator {
  None,
  Entities,
  EntitiesWithInterlink,
  EntitiesWithLabel,
  EntitiesWithDescription,
  SchemaClasses,
  SchemaProperties,
};

enum class PlaceholderKind { Iri, Literal, Integer, Date, Regex, TermList };

struct PlaceholderSpec {
  std::string name;
  PlaceholderKind kind;
};

// One measure derived from a template. Most templates carry exactly one;
// the merged metadata shape (U2/U3/U5) derives three, distinguished by the
// result path, mirroring the sh:resultPath bookkeeping the paper uses.
struct MetricSpec {
  std::string metric_id;
  MeasureKind kind = MeasureKind::Binary;
  Denominator denominator = Denominator::None;
  std::string result_path_iri;     // select results with this predicate path
  bool select_node_level = false;  // select results without a result path
};

struct ShapeTemplate {
  std::string id;
  std::string group;
  std::string dimension;
  std::string listing_caption;
  std::string shape_name;  // node name used in the paper's listing
  Artifact artifact = Artifact::DataGraph;
  Source source = Source::Manual;
  bool enabled_by_default = false;
  std::vector<PlaceholderSpec> placeholders;
  std::vector<MetricSpec> metrics;
  Shape body;                             // primary (printed) form
  std::vector<Target> targets;
  std::map<std::string, Shape> variants;  // alternative bodies (CN9, U3b)

  const PlaceholderSpec* placeholder(const std::string& name) const {
    for (const auto& p : placeholders)
      if (p.name == name) return &p;
    return nullptr;
  }
};

namespace ph_ns {
inline const std::string placeholder = "urn:dqa:ph:";
inline const std::string config = "urn:dqa:cfg:";
}  // namespace ph_ns

// Placeholder leaf in an IRI position.
inline Term ph(const std::string& name) {
  return Term::iri(ph_ns::placeholder + name);
}
// Placeholder leaf in a literal position (rendered as the bare token, the
// way the paper prints it).
inline Term ph_lit(const std::string& name) { return Term::plain(name); }

// Configuration-property slots: the paper's "default properties" that the
// config file may override (rdf:type, rdfs:label, rdfs:comment,
// owl:sameAs).
inline Term cfg_type() { return Term::iri(ph_ns::config + "TYPE_PROPERTY"); }
inline Term cfg_label() { return Term::iri(ph_ns::config + "LABEL_PROPERTY"); }
inline Term cfg_comment() {
  return Term::iri(ph_ns::config + "COMMENT_PROPERTY");
}
inline Term cfg_sameas() {
  return Term::iri(ph_ns::config + "SAMEAS_PROPERTY");
}

namespace detail {

using namespace shacl::build;

inline Term iri(const std::string& s) { return Term::iri(s); }

// The catalog's recurring "filtering" branches: a typed subject passes if
// it is a class, a property, or a named individual; otherwise the actual
// check in the final branch applies.
inline std::vector<Shape> entity_filter_branches() {
  using shacl::Path;
  auto branch = [&](const std::string& cls) {
    return property_shape(Path::pred(cfg_type()), {has_value(iri(cls))});
  };
  return {branch(vocab::rdfs::Class), branch(vocab::rdf::Property),
          branch(vocab::owl::NamedIndividual)};
}

inline Shape entity_filtered(Shape check) {
  auto branches = entity_filter_branches();
  branches.push_back(std::move(check));
  return node_shape({or_shapes(std::move(branches))});
}

inline MetricSpec binary_metric(const std::string& id) {
  MetricSpec m;
  m.metric_id = id;
  m.kind = MeasureKind::Binary;
  return m;
}

inline MetricSpec ratio_metric(const std::string& id, Denominator d) {
  MetricSpec m;
  m.metric_id = id;
  m.kind = MeasureKind::Ratio;
  m.denominator = d;
  return m;
}

inline MetricSpec composite_metric(const std::string& id) {
  MetricSpec m;
  m.metric_id = id;
  m.kind = MeasureKind::Composite;
  return m;
}

inline MetricSpec report_only_metric(const std::string& id) {
  MetricSpec m;
  m.metric_id = id;
  m.kind = MeasureKind::ReportOnly;
  return m;
}

inline ShapeTemplate make(std::string id, std::string group,
                          std::string dimension, std::string caption,
                          std::string shape_name, Artifact artifact,
                          Source source, bool enabled,
                          std::vector<PlaceholderSpec> placeholders,
                          std::vector<MetricSpec> metrics, Shape body,
                          std::vector<Target> targets) {
  ShapeTemplate t;
  t.id = std::move(id);
  t.group = std::move(group);
  t.dimension = std::move(dimension);
  t.listing_caption = std::move(caption);
  t.shape_name = std::move(shape_name);
  t.artifact = artifact;
  t.source = source;
  t.enabled_by_default = enabled;
  t.placeholders = std::move(placeholders);
  t.metrics = std::move(metrics);
  t.body = std::move(body);
  t.body.name = vocab::EX + t.shape_name;
  t.targets = std::move(targets);
  return t;
}

inline std::vector<ShapeTemplate> build_accessibility() {
  using shacl::Path;
  std::vector<ShapeTemplate> out;
  const std::string G = "Accessibility";

  // A2: the VoID description must point to a downloadable dump.
  out.push_back(make(
      "A2", G, "Availability", "Availability - RDF Dump",
      "AvailabilityDumpShape", Artifact::MetadataGraph, Source::AutoConfig,
      true, {}, {binary_metric("A2")},
      node_shape({or_shapes(
          {property_shape(Path::pred(vocab::void_::dataDump), {min_count(1)}),
           property_shape(
               Path::sequence({Path::pred(vocab::dcat::distribution),
                               Path::pred(vocab::dcat::downloadURL)}),
               {min_count(1)})})}),
      {{TargetKind::Class, iri(vocab::void_::Dataset)}}));

  out.push_back(make(
      "L1", G, "Licensing", "Licensing - Machine-readable license",
      "MachineReadableLicenseShape", Artifact::MetadataGraph,
      Source::AutoConfig, true, {}, {binary_metric("L1")},
      node_shape({property(property_shape(
          Path::pred(vocab::dcterms::license),
          {class_of(iri(vocab::dcterms::LicenseDocument)), min_count(1)}))}),
      {{TargetKind::Class, iri(vocab::void_::Dataset)}}));

  // I1M4a: a closed sameAs chain must lead back to the entity itself.
  out.push_back(make(
      "I1M4a", G, "Interlinking", "Interlinking - Open sameAs chains",
      "OpenSameAsChainsShapes", Artifact::DataGraph, Source::Manual, false,
      {{"ENTITY_URI", PlaceholderKind::Iri}}, {report_only_metric("I1M4a")},
      node_shape({property(property_shape(
          Path::one_or_more(Path::pred(cfg_sameas())),
          {has_value(ph("ENTITY_URI"))}))}),
      {{TargetKind::Node, ph("ENTITY_URI")}}));

  // I1M4b: every sameAs link must have its inverse (needs merged graphs,
  // which is why the paper excluded it; kept opt-in).
  out.push_back(make(
      "I1M4b", G, "Interlinking", "Interlinking - Open sameAs pairs",
      "OpenSameAsPairsShape", Artifact::DataGraph, Source::AutoConfig, false,
      {}, {report_only_metric("I1M4b")},
      node_shape({property(property_shape(
          Path::inverse(Path::pred(cfg_sameas())), {equals(cfg_sameas())}))}),
      {{TargetKind::SubjectsOf, cfg_sameas()}}));

  out.push_back(make(
      "I2", G, "Interlinking", "Interlinking - External URIs",
      "UsageExternalURIShape", Artifact::DataGraph, Source::AutoConfig, true,
      {{"DATASET_URI", PlaceholderKind::Iri}},
      {ratio_metric("I2", Denominator::EntitiesWithInterlink)},
      node_shape({property(property_shape(Path::pred(cfg_sameas()),
                                          {pattern("^(?!DATASET_URI)")}))}),
      {{TargetKind::SubjectsOf, cfg_sameas()}}));

  // S1a/S1b: data-integrity proofs; the sec: vocabulary is not yet a W3C
  // recommendation, so both ship disabled.
  out.push_back(make(
      "S1a", G, "Security", "Security - Digital Signatures",
      "DigitalSignatureShape", Artifact::DataGraph, Source::AutoConfig, false,
      {}, {binary_metric("S1a")},
      node_shape({property(property_shape(
          Path::inverse(Path::pred(vocab::rdf::type)), {min_count(1)}))}),
      {{TargetKind::Node, iri(vocab::sec::DataIntegrityProof)}}));

  out.push_back(make(
      "S1b", G, "Security", "Security - Digital Signature properties",
      "DigitalSignaturePropertiesShape", Artifact::DataGraph,
      Source::AutoConfig, false, {}, {binary_metric("S1b")},
      node_shape(
          {property(property_shape(
               Path::pred(vocab::sec::proofPurpose),
               {min_count(1),
                in_list({iri(vocab::sec::assertionMethod),
                         iri(vocab::sec::authentication),
                         iri(vocab::sec::keyAgreement),
                         iri(vocab::sec::capabilityInvocation),
                         iri(vocab::sec::capabilityDelegation)})})),
           property(property_shape(
               Path::pred(vocab::sec::cryptosuite),
               {datatype(iri(vocab::sec::cryptosuiteString)), min_count(1)})),
           property(property_shape(
               Path::pred(vocab::sec::proofValue),
               {datatype(iri(vocab::xsd::string_)), min_count(1)}))}),
      {{TargetKind::Class, iri(vocab::sec::DataIntegrityProof)}}));

  out.push_back(make(
      "S2", G, "Security", "Security - Authenticity of the dataset",
      "AuthenticityOfDatasetShape", Artifact::MetadataGraph,
      Source::AutoConfig, true, {}, {binary_metric("S2")},
      node_shape(
          {or_shapes({property_shape(Path::pred(vocab::dcterms::contributor),
                                     {min_count(1)}),
                      property_shape(Path::pred(vocab::dcterms::creator),
                                     {min_count(1)}),
                      property_shape(Path::pred(vocab::dcterms::publisher),
                                     {min_count(1)})}),
           or_shapes({property_shape(Path::pred(vocab::dcterms::source),
                                     {min_count(1)}),
                      property_shape(Path::pred(vocab::dcterms::provenance),
                                     {min_count(1)})})}),
      {{TargetKind::Class, iri(vocab::void_::Dataset)}}));

  // P1: hash URIs anywhere in an entity IRI hurt large-graph performance.
  out.push_back(make(
      "P1", G, "Performance", "Performance - Use of Hash URIs in Entities",
      "UsageHashURIsShape", Artifact::DataGraph, Source::AutoConfig, true, {},
      {ratio_metric("P1", Denominator::Entities)},
      entity_filtered(node_shape({pattern("^[^#]*$")})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  return out;
}

inline std::vector<ShapeTemplate> build_intrinsic() {
  using shacl::Path;
  std::vector<ShapeTemplate> out;
  const std::string G = "Intrinsic";

  out.push_back(make(
      "SV2A1a", G, "Syntactic Validity",
      "Syntactic Validity - Range of allowed values", "RangeAllowedValuesShape",
      Artifact::DataGraph, Source::Manual, false,
      {{"PROPERTY_URI", PlaceholderKind::Iri},
       {"MIN_VALUE", PlaceholderKind::Literal},
       {"MAX_VALUE", PlaceholderKind::Literal}},
      {composite_metric("SV2A1a")},
      node_shape({property(property_shape(
          Path::pred(ph("PROPERTY_URI")),
          {min_inclusive(ph_lit("MIN_VALUE")),
           max_inclusive(ph_lit("MAX_VALUE"))}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "SV2A1b", G, "Syntactic Validity",
      "Syntactic Validity - Allowed values (at least one value)",
      "AllowedValuesAtLeastOneShape", Artifact::DataGraph, Source::Manual,
      false,
      {{"PROPERTY_URI", PlaceholderKind::Iri},
       {"RDF_TERM", PlaceholderKind::Iri}},
      {composite_metric("SV2A1b")},
      node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI")),
                                          {has_value(ph("RDF_TERM"))}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "SV2A1c", G, "Syntactic Validity", "List of allowed values",
      "AllowedValuesShape", Artifact::DataGraph, Source::Manual, false,
      {{"PROPERTY_URI", PlaceholderKind::Iri},
       {"LIST_ALLOWED_VALUES", PlaceholderKind::TermList}},
      {composite_metric("SV2A1c")},
      node_shape({property(property_shape(
          Path::pred(ph("PROPERTY_URI")),
          {in_list({ph("LIST_ALLOWED_VALUES")})}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "SV2A2", G, "Syntactic Validity", "Syntactic Validity - Syntactic rules",
      "SyntacticRulesShape", Artifact::DataGraph, Source::Manual, false,
      {{"PROPERTY_URI", PlaceholderKind::Iri},
       {"PATTERN", PlaceholderKind::Regex}},
      {composite_metric("SV2A2")},
      node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI")),
                                          {pattern("PATTERN")}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  // SV2A3: community practice expectations on the VoID description; what
  // counts as expected structure is domain knowledge, so instantiation is
  // an explicit opt-in.
  out.push_back(make(
      "SV2A3", G, "Syntactic Validity", "Syntactic Validity - VoID RDF pattern",
      "RDFPatternVOIDShape", Artifact::MetadataGraph, Source::Manual, false,
      {}, {binary_metric("SV2A3")},
      node_shape({property(property_shape(
          Path::pred(vocab::foaf::homepage),
          {min_count(1), datatype(iri(vocab::xsd::string_))}))}),
      {{TargetKind::Class, iri(vocab::void_::Dataset)}}));

  out.push_back(make(
      "SV3", G, "Syntactic Validity", "Syntactic Validity - Malformed literal",
      "MalformedLiteralShape", Artifact::DataGraph, Source::AutoProfile, true,
      {{"PROPERTY_URI", PlaceholderKind::Iri},
       {"DATATYPE_URI", PlaceholderKind::Iri}},
      {composite_metric("SV3")},
      node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI")),
                                          {datatype(ph("DATATYPE_URI"))}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "SA2A2", G, "Semantic Accuracy", "Semantic Accuracy - Inaccurate values",
      "InaccurateValuesShape", Artifact::DataGraph, Source::Manual, false,
      {{"PROPERTY_URI_1", PlaceholderKind::Iri},
       {"PROPERTY_URI_2", PlaceholderKind::Iri}},
      {composite_metric("SA2A2")},
      node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI_1")),
                                          {equals(ph("PROPERTY_URI_2"))}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI_1")}}));

  out.push_back(make(
      "SA3a", G, "Semantic Accuracy",
      "Semantic Accuracy - No inaccurate annotations",
      "NoInaccurateAnnotationsShape", Artifact::DataGraph, Source::Manual,
      false,
      {{"ENTITY_URI", PlaceholderKind::Iri},
       {"LIST_ALLOWED_VALUES", PlaceholderKind::TermList}},
      {composite_metric("SA3a")},
      node_shape({property(property_shape(
          Path::pred(cfg_label()), {in_list({ph("LIST_ALLOWED_VALUES")})}))}),
      {{TargetKind::Node, ph("ENTITY_URI")}}));

  out.push_back(make(
      "SA3b", G, "Semantic Accuracy",
      "Semantic Accuracy - No inaccurate classifications",
      "NoInaccurateClassificationsShape", Artifact::DataGraph, Source::Manual,
      false,
      {{"ENTITY_URI", PlaceholderKind::Iri},
       {"LIST_ALLOWED_VALUES", PlaceholderKind::TermList}},
      {composite_metric("SA3b")},
      node_shape({property(property_shape(
          Path::pred(cfg_type()), {in_list({ph("LIST_ALLOWED_VALUES")})}))}),
      {{TargetKind::Node, ph("ENTITY_URI")}}));

  out.push_back(make(
      "CN1", G, "Consistency", "Consistency - Entities in disjoint classes",
      "EntitiesDisjointClassesShape", Artifact::DataGraph, Source::AutoProfile,
      true,
      {{"CLASS_URI", PlaceholderKind::Iri},
       {"DISJOINT_CLASS_URI", PlaceholderKind::Iri}},
      {composite_metric("CN1")},
      node_shape({not_shape(node_shape({class_of(ph("DISJOINT_CLASS_URI"))}))}),
      {{TargetKind::Class, ph("CLASS_URI")}}));

  out.push_back(make(
      "CN2a", G, "Consistency", "Consistency - No misplaced properties",
      "MisplacedPropertiesShape", Artifact::DataGraph, Source::AutoProfile,
      true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("CN2a")},
      node_shape({property(property_shape(
          Path::inverse(Path::pred(vocab::rdf::type)), {max_count(0)}))}),
      {{TargetKind::Node, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "CN2b", G, "Consistency", "Consistency - No misplaced classes",
      "MisplacedClassesShape", Artifact::DataGraph, Source::AutoProfile, true,
      {{"CLASS_URI", PlaceholderKind::Iri}}, {composite_metric("CN2b")},
      entity_filtered(
          property_shape(Path::pred(ph("CLASS_URI")), {max_count(0)})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "CN3a", G, "Consistency", "Consistency - No misuse of Datatype properties",
      "MisuseDatatypePropertiesShape", Artifact::DataGraph,
      Source::AutoProfile, true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("CN3a")},
      node_shape({property(property_shape(
          Path::pred(ph("PROPERTY_URI")),
          {node_kind(shacl::NodeKindValue::Literal)}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "CN3b", G, "Consistency", "Consistency - No misuse of Object properties",
      "MisuseObjectPropertiesShape", Artifact::DataGraph, Source::AutoProfile,
      true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("CN3b")},
      node_shape({property(property_shape(
          Path::pred(ph("PROPERTY_URI")),
          {node_kind(shacl::NodeKindValue::BlankNodeOrIRI)}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "CN4a", G, "Consistency", "Consistency - Usage of deprecated classes",
      "DeprecatedClassesShape", Artifact::DataGraph, Source::AutoProfile, true,
      {{"CLASSES_LIST", PlaceholderKind::TermList}}, {binary_metric("CN4a")},
      entity_filtered(property_shape(
          Path::pred(cfg_type()),
          {not_shape(node_shape({in_list({ph("CLASSES_LIST")})}))})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "CN4b", G, "Consistency", "Consistency - Usage of deprecated properties",
      "DeprecatedPropertiesUsageShape", Artifact::DataGraph,
      Source::AutoProfile, true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("CN4b")},
      entity_filtered(
          property_shape(Path::pred(ph("PROPERTY_URI")), {max_count(0)})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "CN5", G, "Consistency",
      "Consistency - Uniqueness of inverse functional properties",
      "InverseFunctionalPropertyShape", Artifact::DataGraph,
      Source::AutoProfile, true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("CN5")},
      node_shape({property(property_shape(
          Path::inverse(Path::pred(ph("PROPERTY_URI"))), {max_count(1)}))}),
      {{TargetKind::ObjectsOf, ph("PROPERTY_URI")}}));

  // CN7: the De Morgan translation of a confined negative association rule
  // (A1 and ... and An) -> (not B1 and ... and not Bm). The or/and branches
  // are generated from the rule's property lists; the stored body keeps one
  // placeholder branch each, expanded per list element at instantiation.
  out.push_back(make(
      "CN7", G, "Consistency", "Consistency - Negative dependencies",
      "NegativeDependenciesShape", Artifact::DataGraph, Source::Manual, false,
      {{"CLASS_URI", PlaceholderKind::Iri},
       {"PROPERTY_LIST_A", PlaceholderKind::TermList},
       {"PROPERTY_LIST_B", PlaceholderKind::TermList}},
      {composite_metric("CN7")},
      node_shape({or_shapes(
          {node_shape({or_shapes({property_shape(
               Path::pred(ph("PROPERTY_LIST_A")), {min_count(0)})})}),
           node_shape({and_shapes({property_shape(
               Path::pred(ph("PROPERTY_LIST_B")), {min_count(0)})})})})}),
      {{TargetKind::Class, ph("CLASS_URI")}}));

  // CN9: two shapes (domain and range) with per-declaration variants.
  {
    ShapeTemplate dom = make(
        "CN9-domain", G, "Consistency",
        "Consistency - Correct domain (specific class)", "CorrectDomainShape",
        Artifact::DataGraph, Source::AutoProfile, true,
        {{"PROPERTY_URI", PlaceholderKind::Iri},
         {"CLASS", PlaceholderKind::Iri}},
        {composite_metric("CN9-domain")},
        node_shape({class_of(ph("CLASS"))}),
        {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}});
    dom.variants["thing"] =
        node_shape({node_kind(shacl::NodeKindValue::BlankNodeOrIRI)});
    dom.variants["thing"].name = vocab::EX + "CorrectDomainShape";
    out.push_back(std::move(dom));

    ShapeTemplate rng = make(
        "CN9-range", G, "Consistency",
        "Consistency - Correct range (specific datatype or class)",
        "CorrectRangeShape", Artifact::DataGraph, Source::AutoProfile, true,
        {{"PROPERTY_URI", PlaceholderKind::Iri},
         {"DATATYPE", PlaceholderKind::Iri},
         {"CLASS", PlaceholderKind::Iri}},
        {composite_metric("CN9-range")},
        node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI")),
                                            {datatype(ph("DATATYPE"))}))}),
        {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}});
    rng.variants["class"] =
        node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI")),
                                            {class_of(ph("CLASS"))}))});
    rng.variants["literal"] = node_shape({property(
        property_shape(Path::pred(ph("PROPERTY_URI")),
                       {node_kind(shacl::NodeKindValue::Literal)}))});
    rng.variants["thing"] = node_shape({property(
        property_shape(Path::pred(ph("PROPERTY_URI")),
                       {node_kind(shacl::NodeKindValue::BlankNodeOrIRI)}))});
    rng.variants["resource"] = node_shape({property(property_shape(
        Path::pred(ph("PROPERTY_URI")),
        {or_shapes(
            {node_shape({node_kind(shacl::NodeKindValue::BlankNodeOrIRI)}),
             node_shape({node_kind(shacl::NodeKindValue::Literal)})})}))});
    for (auto& [k, v] : rng.variants) v.name = vocab::EX + "CorrectRangeShape";
    out.push_back(std::move(rng));
  }

  out.push_back(make(
      "CN10a", G, "Consistency",
      "Consistency - No inconsistent values (Irreflexive property)",
      "IrreflexivePropertyShape", Artifact::DataGraph, Source::AutoProfile,
      true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("CN10a")},
      node_shape({disjoint(ph("PROPERTY_URI"))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "CN10b", G, "Consistency",
      "Consistency - No inconsistent values (Functional property)",
      "FunctionalPropertyShape", Artifact::DataGraph, Source::AutoProfile,
      true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("CN10b")},
      node_shape({property(
          property_shape(Path::pred(ph("PROPERTY_URI")), {max_count(1)}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "CN10c", G, "Consistency",
      "Consistency - No inconsistent values (Asymmetric property)",
      "AsymmetricPropertyShape", Artifact::DataGraph, Source::AutoProfile,
      true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("CN10c")},
      node_shape({property(
          property_shape(Path::inverse(Path::pred(ph("PROPERTY_URI"))),
                         {disjoint(ph("PROPERTY_URI"))}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "CS2", G, "Conciseness", "Extensional conciseness - Uniqueness rule",
      "UniquenessRuleShape", Artifact::DataGraph, Source::Manual, false,
      {{"PROPERTY_URI", PlaceholderKind::Iri}}, {composite_metric("CS2")},
      node_shape({property(property_shape(
          Path::inverse(Path::pred(ph("PROPERTY_URI"))), {max_count(1)}))}),
      {{TargetKind::ObjectsOf, ph("PROPERTY_URI")}}));

  // CP1: class usage, discounting vocabulary-predefined individuals.
  {
    Shape not_named = node_shape(
        {property(property_shape(
            Path::pred(vocab::rdf::type),
            {not_shape(
                node_shape({has_value(iri(vocab::owl::NamedIndividual))}))}))},
        vocab::EX + "NotNamedIndividualShape");
    out.push_back(make(
        "CP1", G, "Completeness",
        "Completeness - Schema completeness (Class usage)",
        "SchemaCompletenessClassUsageShape", Artifact::DataGraph,
        Source::AutoProfile, true, {{"CLASS_URI", PlaceholderKind::Iri}},
        {composite_metric("CP1")},
        node_shape({property(property_shape(
            Path::inverse(Path::pred(vocab::rdf::type)),
            {min_count(1),
             qualified(node_shape({node(not_named)}), 1)}))}),
        {{TargetKind::Node, ph("CLASS_URI")}}));
  }

  out.push_back(make(
      "CP2", G, "Completeness", "Completeness - Property completeness",
      "PropertyCompletenessShape", Artifact::DataGraph, Source::Manual, false,
      {{"PROPERTY_URI", PlaceholderKind::Iri},
       {"COUNT", PlaceholderKind::Integer}},
      {composite_metric("CP2")},
      node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI")),
                                          {[] {
                                            auto c = min_count(0);
                                            c.int_placeholder = "COUNT";
                                            return c;
                                          }()}))}),
      {{TargetKind::SubjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "CP3a", G, "Completeness",
      "Completeness - Population completeness (Property approach)",
      "PopulationCompletenessShape_Property", Artifact::DataGraph,
      Source::Manual, false,
      {{"ENTITY_URI", PlaceholderKind::Iri},
       {"PROPERTY_URI", PlaceholderKind::Iri},
       {"COUNT", PlaceholderKind::Integer},
       {"LIST_ALLOWED_VALUES", PlaceholderKind::TermList}},
      {composite_metric("CP3a")},
      node_shape({property(property_shape(
          Path::pred(ph("PROPERTY_URI")),
          {[] {
             auto c = min_count(0);
             c.int_placeholder = "COUNT";
             return c;
           }(),
           [] {
             auto c = max_count(0);
             c.int_placeholder = "COUNT";
             return c;
           }(),
           in_list({ph("LIST_ALLOWED_VALUES")})}))}),
      {{TargetKind::Node, ph("ENTITY_URI")}}));

  out.push_back(make(
      "CP3b", G, "Completeness",
      "Completeness - Population completeness (Class approach)",
      "PopulationCompletenessShape_Class", Artifact::DataGraph, Source::Manual,
      false,
      {{"CLASS_URI", PlaceholderKind::Iri},
       {"COUNT", PlaceholderKind::Integer},
       {"LIST_ALLOWED_VALUES", PlaceholderKind::TermList}},
      {composite_metric("CP3b")},
      node_shape({property(property_shape(
          Path::inverse(Path::pred(vocab::rdf::type)),
          {[] {
             auto c = min_count(0);
             c.int_placeholder = "COUNT";
             return c;
           }(),
           [] {
             auto c = max_count(0);
             c.int_placeholder = "COUNT";
             return c;
           }(),
           in_list({ph("LIST_ALLOWED_VALUES")})}))}),
      {{TargetKind::Node, ph("CLASS_URI")}}));

  out.push_back(make(
      "CP4", G, "Completeness", "Completeness - Interlinking completeness",
      "InterlinkingCompletenessShape", Artifact::DataGraph, Source::AutoConfig,
      true, {}, {ratio_metric("CP4", Denominator::Entities)},
      entity_filtered(
          property_shape(Path::pred(cfg_sameas()), {min_count(1)})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  return out;
}

inline std::vector<ShapeTemplate> build_contextual() {
  using shacl::Path;
  std::vector<ShapeTemplate> out;
  const std::string G = "Contextual";

  out.push_back(make(
      "R2", G, "Relevancy", "Relevancy - Coverage", "CoverageOfEntitiesShape",
      Artifact::DataGraph, Source::Manual, false,
      {{"CLASS_URI", PlaceholderKind::Iri},
       {"PROPERTY_URI_1", PlaceholderKind::Iri},
       {"PROPERTY_URI_2", PlaceholderKind::Iri}},
      {composite_metric("R2")},
      node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI_1")),
                                          {min_count(1), max_count(1)})),
                  property(property_shape(Path::pred(ph("PROPERTY_URI_2")),
                                          {min_count(1), max_count(1)}))}),
      {{TargetKind::Class, ph("CLASS_URI")}}));

  out.push_back(make(
      "U1a", G, "Understandability",
      "Understandability - Human-readable labels in entities",
      "LabelForEntitiesShape", Artifact::DataGraph, Source::AutoConfig, true,
      {}, {ratio_metric("U1a", Denominator::Entities)},
      entity_filtered(
          property_shape(Path::pred(cfg_label()), {min_count(1)})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "U1b", G, "Understandability",
      "Understandability - Human-readable labels in Classes",
      "LabelForClassesShape", Artifact::SchemaGraph, Source::AutoConfig, true,
      {}, {ratio_metric("U1b", Denominator::SchemaClasses)},
      node_shape({property(
          property_shape(Path::pred(cfg_label()), {min_count(1)}))}),
      {{TargetKind::Class, iri(vocab::rdfs::Class)}}));

  out.push_back(make(
      "U1c", G, "Understandability",
      "Understandability - Human-readable labels in Properties",
      "LabelForPropertiesShape", Artifact::SchemaGraph, Source::AutoConfig,
      true, {}, {ratio_metric("U1c", Denominator::SchemaProperties)},
      node_shape({property(
          property_shape(Path::pred(cfg_label()), {min_count(1)}))}),
      {{TargetKind::Class, iri(vocab::rdf::Property)}}));

  out.push_back(make(
      "U1d", G, "Understandability", "Understandability - Dataset metadata",
      "UnderstandabilityDatasetMetadataShape", Artifact::MetadataGraph,
      Source::AutoConfig, true, {}, {binary_metric("U1d")},
      node_shape(
          {property(property_shape(
               Path::pred(vocab::dcterms::title),
               {min_count(1), node_kind(shacl::NodeKindValue::Literal)})),
           property(property_shape(
               Path::pred(vocab::dcterms::description),
               {min_count(1), node_kind(shacl::NodeKindValue::Literal)})),
           property(property_shape(
               Path::pred(vocab::foaf::homepage),
               {min_count(1), class_of(iri(vocab::foaf::Document))}))}),
      {{TargetKind::Class, iri(vocab::void_::Dataset)}}));

  // U2/U3/U5 share one shape; the result path splits the three measures.
  {
    MetricSpec u2 = binary_metric("U2");
    u2.result_path_iri = vocab::void_::exampleResource;
    MetricSpec u5 = binary_metric("U5");
    u5.result_path_iri = vocab::void_::vocabulary;
    MetricSpec u3 = binary_metric("U3a");
    u3.select_node_level = true;
    out.push_back(make(
        "U2U3U5", G, "Understandability", "Understandability - Dataset metadata",
        "UnderstandabilityExtraMetadataShape", Artifact::MetadataGraph,
        Source::AutoConfig, true, {}, {u2, u3, u5},
        node_shape(
            {property(property_shape(Path::pred(vocab::void_::exampleResource),
                                     {min_count(1)})),
             property(property_shape(Path::pred(vocab::void_::vocabulary),
                                     {min_count(1)})),
             or_shapes(
                 {property_shape(Path::pred(vocab::void_::uriRegexPattern),
                                 {min_count(1)}),
                  property_shape(
                      Path::pred(vocab::void_::uriSpace),
                      {min_count(1),
                       node_kind(shacl::NodeKindValue::Literal)})})}),
        {{TargetKind::Class, iri(vocab::void_::Dataset)}}));
  }

  // U3b: entity URIs must match the pattern/namespace the metadata
  // declares. Instantiated with whichever of the two values profiling
  // found (pattern preferred when both exist).
  {
    ShapeTemplate u3b = make(
        "U3b", G, "Understandability",
        "Understandability - URI regex or namespace compliance for entities",
        "URIRegexComplianceShape", Artifact::DataGraph, Source::AutoConfig,
        true,
        {{"URI_REGEX_PATTERN", PlaceholderKind::Regex},
         {"URI_SPACE", PlaceholderKind::Iri}},
        {ratio_metric("U3b", Denominator::Entities)},
        [] {
          auto branches = entity_filter_branches();
          branches.push_back(node_shape({pattern("^URI_REGEX_PATTERN")}));
          branches.push_back(node_shape({pattern("^URI_SPACE")}));
          return node_shape({or_shapes(std::move(branches))});
        }(),
        {{TargetKind::SubjectsOf, cfg_type()}});
    u3b.variants["regex"] =
        entity_filtered(node_shape({pattern("^URI_REGEX_PATTERN")}));
    u3b.variants["space"] =
        entity_filtered(node_shape({pattern("^URI_SPACE")}));
    for (auto& [k, v] : u3b.variants)
      v.name = vocab::EX + "URIRegexComplianceShape";
    out.push_back(std::move(u3b));
  }

  // TW2/TW3: one shape; ex:trustvalue is no standard vocabulary, hence
  // excluded by default.
  out.push_back(make(
      "TW23", G, "Trustworthiness", "Trustworthiness - Trust values in entities",
      "TrustValuesEntitiesShape", Artifact::DataGraph, Source::AutoConfig,
      false, {}, {ratio_metric("TW23", Denominator::Entities)},
      entity_filtered(property_shape(Path::pred(vocab::EX + "trustvalue"),
                                     {min_count(1)})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "TW5a", G, "Trustworthiness",
      "Trustworthiness - Trusted contributors and providers",
      "TrustedContributorProviderShape", Artifact::MetadataGraph,
      Source::Manual, false,
      {{"LIST_TRUSTED_PROVIDERS", PlaceholderKind::TermList},
       {"LIST_TRUSTED_CONTRIBUTORS", PlaceholderKind::TermList}},
      {binary_metric("TW5a")},
      node_shape(
          {property(property_shape(Path::pred(vocab::dcterms::provider),
                                   {in_list({ph("LIST_TRUSTED_PROVIDERS")})})),
           property(property_shape(
               Path::pred(vocab::dcterms::contributor),
               {in_list({ph("LIST_TRUSTED_CONTRIBUTORS")})}))}),
      {{TargetKind::Class, iri(vocab::void_::Dataset)}}));

  out.push_back(make(
      "TW5b", G, "Trustworthiness",
      "Trustworthiness - Level of trust of the publisher",
      "LevelOfTrustPublisherShape", Artifact::MetadataGraph,
      Source::AutoConfig, false, {}, {binary_metric("TW5b")},
      node_shape({property(property_shape(
          Path::pred(vocab::EX + "trustvalue"),
          {min_count(1),
           min_inclusive(Term::literal("1", vocab::xsd::integer)),
           max_inclusive(Term::literal("9", vocab::xsd::integer)),
           datatype(iri(vocab::xsd::integer))}))}),
      {{TargetKind::ObjectsOf, iri(vocab::dcterms::publisher)}}));

  out.push_back(make(
      "TW6", G, "Trustworthiness", "Trustworthiness - Trust through association",
      "TrustThroughAssociationShape", Artifact::DataGraph, Source::Manual,
      false, {{"LIST_TRUSTED_AUTHORS", PlaceholderKind::TermList}},
      {ratio_metric("TW6", Denominator::Entities)},
      entity_filtered(property_shape(
          Path::pred(vocab::prov::wasAttributedTo),
          {in_list({ph("LIST_TRUSTED_AUTHORS")}), min_count(1)})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "T1", G, "Timeliness", "Timeliness - Outdated entities",
      "TimelinessEntitiesShape", Artifact::DataGraph, Source::Manual, false,
      {{"DATE_RANGE_MIN_BOUND", PlaceholderKind::Date}},
      {ratio_metric("T1", Denominator::Entities)},
      entity_filtered(
          property_shape(Path::pred(vocab::dcterms::date),
                         {min_inclusive(ph_lit("DATE_RANGE_MIN_BOUND"))})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "T2", G, "Timeliness", "Timeliness - Outdated dataset",
      "TimelinessDatasetShape", Artifact::MetadataGraph, Source::Manual, false,
      {{"DATE_RANGE_MIN_BOUND", PlaceholderKind::Date}},
      {binary_metric("T2")},
      node_shape({property(
          property_shape(Path::pred(vocab::dcterms::modified),
                         {min_inclusive(ph_lit("DATE_RANGE_MIN_BOUND"))}))}),
      {{TargetKind::Class, iri(vocab::void_::Dataset)}}));

  return out;
}

inline std::vector<ShapeTemplate> build_representational() {
  using shacl::Path;
  std::vector<ShapeTemplate> out;
  const std::string G = "Representational";

  out.push_back(make(
      "RC1a", G, "Representational Conciseness",
      "Representational conciseness - Short URIs", "URIsLengthShape",
      Artifact::DataGraph, Source::AutoConfig, true,
      {{"LENGTH_VALUE", PlaceholderKind::Integer}},
      {ratio_metric("RC1a", Denominator::Entities)},
      entity_filtered(node_shape({[] {
        auto c = shacl::build::max_length(0);
        c.int_placeholder = "LENGTH_VALUE";
        return c;
      }()})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "RC1b", G, "Representational Conciseness",
      "Representational conciseness - Parameters in URIs",
      "URIsParametersShape", Artifact::DataGraph, Source::AutoConfig, true, {},
      {ratio_metric("RC1b", Denominator::Entities)},
      entity_filtered(
          node_shape({not_shape(node_shape({pattern("\\?.+=.*")}))})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "RC2", G, "Representational Conciseness",
      "Representational conciseness - Use of prolix RDF features",
      "ProlixRDFFeaturesShape", Artifact::DataGraph, Source::AutoConfig, true,
      {}, {ratio_metric("RC2", Denominator::Entities)},
      entity_filtered(node_shape({not_shape(node_shape({or_shapes(
          {node_shape({class_of(iri(vocab::rdf::Statement))}),
           node_shape({class_of(iri(vocab::rdf::List))}),
           node_shape({class_of(iri(vocab::rdf::Seq))}),
           node_shape({class_of(iri(vocab::rdf::Bag))}),
           node_shape({class_of(iri(vocab::rdf::Alt))})})}))})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "ITO1", G, "Interoperability", "Interoperability - Re-use of existing terms",
      "ReUseExistingVocabularyTerms", Artifact::DataGraph, Source::Manual,
      false,
      {{"CLASS_URI", PlaceholderKind::Iri},
       {"PROPERTY_URI_1", PlaceholderKind::Iri},
       {"PROPERTY_URI_2", PlaceholderKind::Iri}},
      {composite_metric("ITO1")},
      node_shape({property(property_shape(Path::pred(ph("PROPERTY_URI_1")),
                                          {min_count(1)})),
                  property(property_shape(Path::pred(ph("PROPERTY_URI_2")),
                                          {min_count(1)}))}),
      {{TargetKind::Class, ph("CLASS_URI")}}));

  out.push_back(make(
      "V1", G, "Versatility", "Versatility - Serialization formats VoID",
      "SerializationFormatsShape", Artifact::MetadataGraph, Source::AutoConfig,
      true, {}, {binary_metric("V1")},
      node_shape({property(property_shape(
          Path::pred(vocab::void_::feature),
          {min_count(1), max_count(5),
           in_list({iri("http://www.w3.org/ns/formats/N3"),
                    iri("http://www.w3.org/ns/formats/N-Triples"),
                    iri("http://www.w3.org/ns/formats/RDF_XML"),
                    iri("http://www.w3.org/ns/formats/RDFa"),
                    iri("http://www.w3.org/ns/formats/Turtle")})}))}),
      {{TargetKind::Class, iri(vocab::void_::Dataset)}}));

  out.push_back(make(
      "V2a", G, "Versatility", "Versatility - Languages in entities labels",
      "DifferentLanguagesLabelsShape", Artifact::DataGraph, Source::AutoConfig,
      true, {}, {ratio_metric("V2a", Denominator::EntitiesWithLabel)},
      entity_filtered(
          property_shape(Path::pred(cfg_label()),
                         {datatype(iri(vocab::rdf::langString))})),
      {{TargetKind::SubjectsOf, cfg_label()}}));

  out.push_back(make(
      "V2b", G, "Versatility", "Versatility - Languages in entities descriptions",
      "DifferentLanguagesDescriptionsShape", Artifact::DataGraph,
      Source::AutoConfig, true, {},
      {ratio_metric("V2b", Denominator::EntitiesWithDescription)},
      entity_filtered(
          property_shape(Path::pred(cfg_comment()),
                         {datatype(iri(vocab::rdf::langString))})),
      {{TargetKind::SubjectsOf, cfg_comment()}}));

  out.push_back(make(
      "V2c", G, "Versatility",
      "Versatility - Languages in labels of entities (Extension)",
      "DifferentLanguagesLabelsExtensionShape", Artifact::DataGraph,
      Source::Manual, false,
      {{"REQUIRED_LANGUAGES", PlaceholderKind::TermList}},
      {ratio_metric("V2c", Denominator::EntitiesWithLabel)},
      entity_filtered(property_shape(
          Path::pred(cfg_label()),
          {datatype(iri(vocab::rdf::langString)),
           shacl::build::language_in({"REQUIRED_LANGUAGES"}),
           shacl::build::unique_lang()})),
      {{TargetKind::SubjectsOf, cfg_label()}}));

  out.push_back(make(
      "ITP1a", G, "Interpretability",
      "Interpretability - Use of self-descriptive formats",
      "SelfDescriptiveFormatEntitiesShape", Artifact::DataGraph,
      Source::AutoConfig, true, {},
      {ratio_metric("ITP1a", Denominator::Entities)},
      entity_filtered(node_shape({node_kind(shacl::NodeKindValue::IRI)})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  out.push_back(make(
      "ITP1b", G, "Interpretability",
      "Interpretability - Use of self-descriptive formats (properties)",
      "SelfDescriptiveFormatPropertiesShape", Artifact::DataGraph,
      Source::AutoProfile, true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("ITP1b")},
      node_shape({node_kind(shacl::NodeKindValue::IRI)}),
      {{TargetKind::ObjectsOf, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "ITP3a", G, "Interpretability", "Interpretability - Undefined classes",
      "UndefinedClassShape", Artifact::SchemaGraph, Source::AutoProfile, true,
      {{"CLASS_URI", PlaceholderKind::Iri}}, {composite_metric("ITP3a")},
      node_shape({property(property_shape(
          Path::pred(vocab::rdf::type),
          {has_value(iri(vocab::rdfs::Class)), min_count(1)}))}),
      {{TargetKind::Node, ph("CLASS_URI")}}));

  out.push_back(make(
      "ITP3b", G, "Interpretability", "Interpretability - Undefined properties",
      "UndefinedPropertyShape", Artifact::SchemaGraph, Source::AutoProfile,
      true, {{"PROPERTY_URI", PlaceholderKind::Iri}},
      {composite_metric("ITP3b")},
      node_shape({property(property_shape(
          Path::pred(vocab::rdf::type),
          {has_value(iri(vocab::rdf::Property)), min_count(1)}))}),
      {{TargetKind::Node, ph("PROPERTY_URI")}}));

  out.push_back(make(
      "ITP4", G, "Interpretability", "Interpretability - Usage of blank nodes",
      "BlankNodesUsageEntitiesShape", Artifact::DataGraph, Source::AutoConfig,
      true, {}, {ratio_metric("ITP4", Denominator::Entities)},
      entity_filtered(node_shape({not_shape(
          node_shape({node_kind(shacl::NodeKindValue::BlankNode)}))})),
      {{TargetKind::SubjectsOf, cfg_type()}}));

  return out;
}

}  // namespace detail

// The full catalog: 64 templates covering the 68 printed listings (the
// four extra CN9 listings are variants of the two CN9 templates).
inline const std::vector<ShapeTemplate>& all_templates() {
  static const std::vector<ShapeTemplate> catalog = [] {
    std::vector<ShapeTemplate> out;
    auto append = [&](std::vector<ShapeTemplate> group) {
      for (auto& t : group) out.push_back(std::move(t));
    };
    append(detail::build_accessibility());
    append(detail::build_intrinsic());
    append(detail::build_contextual());
    append(detail::build_representational());
    return out;
  }();
  return catalog;
}

inline const ShapeTemplate* find_template(const std::string& id) {
  for (const auto& t : all_templates())
    if (t.id == id) return &t;
  return nullptr;
}

}  // namespace dqa::catalog
