#pragma once

#include <string>

// Well-known vocabulary IRIs used across the toolkit.
namespace dqa::vocab {

inline const std::string RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string RDFS = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string OWL = "http://www.w3.org/2002/07/owl#";
inline const std::string XSD = "http://www.w3.org/2001/XMLSchema#";
inline const std::string SH = "http://www.w3.org/ns/shacl#";
inline const std::string VOID = "http://rdfs.org/ns/void#";
inline const std::string DCAT = "http://www.w3.org/ns/dcat#";
inline const std::string DCTERMS = "http://purl.org/dc/terms/";
inline const std::string FOAF = "http://xmlns.com/foaf/0.1/";
inline const std::string PROV = "http://www.w3.org/ns/prov#";
inline const std::string SEC = "https://w3id.org/security#";
inline const std::string EX = "http://example.org/";

namespace rdf {
inline const std::string type = RDF + "type";
inline const std::string Property = RDF + "Property";
inline const std::string langString = RDF + "langString";
inline const std::string HTML = RDF + "HTML";
inline const std::string XMLLiteral = RDF + "XMLLiteral";
inline const std::string first = RDF + "first";
inline const std::string rest = RDF + "rest";
inline const std::string nil = RDF + "nil";
inline const std::string Statement = RDF + "Statement";
inline const std::string List = RDF + "List";
inline const std::string Seq = RDF + "Seq";
inline const std::string Bag = RDF + "Bag";
inline const std::string Alt = RDF + "Alt";
}  // namespace rdf

namespace rdfs {
inline const std::string Class = RDFS + "Class";
inline const std::string Datatype = RDFS + "Datatype";
inline const std::string Resource = RDFS + "Resource";
inline const std::string Literal = RDFS + "Literal";
inline const std::string label = RDFS + "label";
inline const std::string comment = RDFS + "comment";
inline const std::string domain = RDFS + "domain";
inline const std::string range = RDFS + "range";
inline const std::string subClassOf = RDFS + "subClassOf";
}  // namespace rdfs

namespace owl {
inline const std::string Class = OWL + "Class";
inline const std::string Thing = OWL + "Thing";
inline const std::string Ontology = OWL + "Ontology";
inline const std::string NamedIndividual = OWL + "NamedIndividual";
inline const std::string DatatypeProperty = OWL + "DatatypeProperty";
inline const std::string ObjectProperty = OWL + "ObjectProperty";
inline const std::string AnnotationProperty = OWL + "AnnotationProperty";
inline const std::string FunctionalProperty = OWL + "FunctionalProperty";
inline const std::string InverseFunctionalProperty =
    OWL + "InverseFunctionalProperty";
inline const std::string TransitiveProperty = OWL + "TransitiveProperty";
inline const std::string SymmetricProperty = OWL + "SymmetricProperty";
inline const std::string AsymmetricProperty = OWL + "AsymmetricProperty";
inline const std::string ReflexiveProperty = OWL + "ReflexiveProperty";
inline const std::string IrreflexiveProperty = OWL + "IrreflexiveProperty";
inline const std::string OntologyProperty = OWL + "OntologyProperty";
inline const std::string DeprecatedClass = OWL + "DeprecatedClass";
inline const std::string DeprecatedProperty = OWL + "DeprecatedProperty";
inline const std::string disjointWith = OWL + "disjointWith";
inline const std::string sameAs = OWL + "sameAs";
}  // namespace owl

namespace xsd {
inline const std::string string_ = XSD + "string";
inline const std::string boolean = XSD + "boolean";
inline const std::string integer = XSD + "integer";
inline const std::string decimal = XSD + "decimal";
inline const std::string float_ = XSD + "float";
inline const std::string double_ = XSD + "double";
inline const std::string date = XSD + "date";
inline const std::string dateTime = XSD + "dateTime";
inline const std::string time = XSD + "time";
inline const std::string anyURI = XSD + "anyURI";
inline const std::string duration = XSD + "duration";
}  // namespace xsd

namespace sh {
inline const std::string NodeShape = SH + "NodeShape";
inline const std::string PropertyShape = SH + "PropertyShape";
inline const std::string ValidationReport = SH + "ValidationReport";
inline const std::string ValidationResult = SH + "ValidationResult";
inline const std::string Violation = SH + "Violation";
inline const std::string conforms = SH + "conforms";
inline const std::string result = SH + "result";
inline const std::string focusNode = SH + "focusNode";
inline const std::string resultPath = SH + "resultPath";
inline const std::string value = SH + "value";
inline const std::string sourceShape = SH + "sourceShape";
inline const std::string sourceConstraintComponent =
    SH + "sourceConstraintComponent";
inline const std::string resultSeverity = SH + "resultSeverity";
inline const std::string resultMessage = SH + "resultMessage";
}  // namespace sh

namespace void_ {
inline const std::string Dataset = VOID + "Dataset";
inline const std::string dataDump = VOID + "dataDump";
inline const std::string exampleResource = VOID + "exampleResource";
inline const std::string vocabulary = VOID + "vocabulary";
inline const std::string uriRegexPattern = VOID + "uriRegexPattern";
inline const std::string uriSpace = VOID + "uriSpace";
inline const std::string feature = VOID + "feature";
}  // namespace void_

namespace dcat {
inline const std::string Dataset = DCAT + "Dataset";
inline const std::string distribution = DCAT + "distribution";
inline const std::string downloadURL = DCAT + "downloadURL";
inline const std::string landingPage = DCAT + "landingPage";
}  // namespace dcat

namespace dcterms {
inline const std::string license = DCTERMS + "license";
inline const std::string LicenseDocument = DCTERMS + "LicenseDocument";
inline const std::string contributor = DCTERMS + "contributor";
inline const std::string creator = DCTERMS + "creator";
inline const std::string publisher = DCTERMS + "publisher";
inline const std::string provider = DCTERMS + "provider";
inline const std::string source = DCTERMS + "source";
inline const std::string provenance = DCTERMS + "provenance";
inline const std::string title = DCTERMS + "title";
inline const std::string description = DCTERMS + "description";
inline const std::string modified = DCTERMS + "modified";
inline const std::string date = DCTERMS + "date";
}  // namespace dcterms

namespace foaf {
inline const std::string homepage = FOAF + "homepage";
inline const std::string Document = FOAF + "Document";
}  // namespace foaf

namespace prov {
inline const std::string wasAttributedTo = PROV + "wasAttributedTo";
}

namespace sec {
inline const std::string DataIntegrityProof = SEC + "DataIntegrityProof";
inline const std::string proofPurpose = SEC + "proofPurpose";
inline const std::string cryptosuite = SEC + "cryptosuite";
inline const std::string cryptosuiteString = SEC + "cryptosuiteString";
inline const std::string proofValue = SEC + "proofValue";
inline const std::string assertionMethod = SEC + "assertionMethod";
inline const std::string authentication = SEC + "authentication";
inline const std::string keyAgreement = SEC + "keyAgreement";
inline const std::string capabilityInvocation = SEC + "capabilityInvocation";
inline const std::string capabilityDelegation = SEC + "capabilityDelegation";
}  // namespace sec

}  // namespace dqa::vocab
