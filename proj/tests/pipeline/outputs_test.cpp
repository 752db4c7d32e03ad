#include "dqa/outputs.hpp"

#include "doctest.h"

using namespace dqa;

namespace {
MeasureRecord binary_record(const std::string& metric, size_t violations) {
  MeasureRecord r;
  r.group = "Accessibility";
  r.dimension = "Licensing";
  r.metric_id = metric;
  r.kind = catalog::MeasureKind::Binary;
  r.shape_count = 1;
  r.violations = violations;
  r.conformance_score = compute_binary(violations);
  r.applicable = true;
  return r;
}
}  // namespace

TEST_CASE("csv with no records is header only") {
  std::string csv = measures_to_csv({});
  CHECK(csv ==
        "group,dimension,metric_id,measure_kind,shape_count,violations,"
        "denominator,raw_violation_ratio,conformance_score,applicable\n");
}

TEST_CASE("binary row leaves denominator and raw ratio empty") {
  std::string csv = measures_to_csv({binary_record("L1", 1)});
  auto second_line = csv.substr(csv.find('\n') + 1);
  CHECK(second_line == "Accessibility,Licensing,L1,binary,1,1,,,0,true\n");
}

TEST_CASE("ratio row carries denominator, raw and conformance") {
  MeasureRecord r;
  r.group = "Accessibility";
  r.dimension = "Performance";
  r.metric_id = "P1";
  r.kind = catalog::MeasureKind::Ratio;
  r.shape_count = 1;
  r.violations = 2;
  r.denominator = 5;
  auto ratio = compute_ratio(2, 5);
  r.raw_violation_ratio = ratio.raw;
  r.conformance_score = ratio.conformance;
  r.applicable = true;
  std::string csv = measures_to_csv({r});
  CHECK(csv.find("Accessibility,Performance,P1,ratio,1,2,5,0.4,0.6,true\n") !=
        std::string::npos);
}

TEST_CASE("inapplicable ratio row has empty scores and applicable=false") {
  MeasureRecord r;
  r.group = "Contextual";
  r.dimension = "Understandability";
  r.metric_id = "U1a";
  r.kind = catalog::MeasureKind::Ratio;
  r.shape_count = 1;
  r.applicable = false;
  std::string csv = measures_to_csv({r});
  CHECK(csv.find("Contextual,Understandability,U1a,ratio,1,0,,,,false\n") !=
        std::string::npos);
}

TEST_CASE("csv quotes fields containing separators") {
  MeasureRecord r = binary_record("X1", 0);
  r.dimension = "Weird, \"dimension\"";
  std::string csv = measures_to_csv({r});
  CHECK(csv.find("\"Weird, \"\"dimension\"\"\"") != std::string::npos);
}

TEST_CASE("html lists every record exactly once and is self-contained") {
  auto html = measures_to_html({binary_record("L1", 1), binary_record("A2", 0)});
  CHECK(html.find("<script") == std::string::npos);
  CHECK(html.find("L1") != std::string::npos);
  CHECK(html.find("A2") != std::string::npos);
  CHECK(html.find("<!DOCTYPE html>") == 0);
}

TEST_CASE("measures json round-trips the fields") {
  auto j = measures_to_json({binary_record("L1", 1)});
  REQUIRE(j.size() == 1);
  CHECK(j[0]["metric_id"] == "L1");
  CHECK(j[0]["measure_kind"] == "binary");
  CHECK(j[0]["violations"] == 1);
  CHECK(j[0]["conformance_score"] == 0.0);
}
