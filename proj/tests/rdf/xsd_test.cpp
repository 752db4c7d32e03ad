#include "dqa/rdf/xsd.hpp"

#include "doctest.h"

using namespace dqa;
using rdf::Term;

namespace {
Term lit(const std::string& lex, const std::string& local) {
  return Term::literal(lex, vocab::XSD + local);
}
}  // namespace

TEST_CASE("ill-typed integers") {
  CHECK(xsd::literal_is_ill_typed(lit("abc", "integer")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("42", "integer")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("-0042", "integer")));
  CHECK(xsd::literal_is_ill_typed(lit("4.2", "integer")));
  CHECK(xsd::literal_is_ill_typed(lit("", "integer")));
}

TEST_CASE("bounded integer ranges") {
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("127", "byte")));
  CHECK(xsd::literal_is_ill_typed(lit("128", "byte")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("-128", "byte")));
  CHECK(xsd::literal_is_ill_typed(lit("-129", "byte")));
  CHECK(xsd::literal_is_ill_typed(lit("-1", "nonNegativeInteger")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("0", "nonNegativeInteger")));
  CHECK(xsd::literal_is_ill_typed(lit("0", "positiveInteger")));
  CHECK(xsd::literal_is_ill_typed(lit("18446744073709551616", "unsignedLong")));
  CHECK_FALSE(
      xsd::literal_is_ill_typed(lit("18446744073709551615", "unsignedLong")));
}

TEST_CASE("date lexical space (oracle: XSD 1.1 grammar checks)") {
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("2024-02-29", "date")));
  CHECK(xsd::literal_is_ill_typed(lit("2023-02-29", "date")));
  CHECK(xsd::literal_is_ill_typed(lit("2024-13-40", "date")));
  CHECK(xsd::literal_is_ill_typed(lit("2024-00-01", "date")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("2024-12-31Z", "date")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("2024-12-31+05:30", "date")));
  CHECK(xsd::literal_is_ill_typed(lit("2024-12-31+15:00", "date")));
  CHECK(xsd::literal_is_ill_typed(lit("24-12-31", "date")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("-0450-01-01", "date")));
}

TEST_CASE("dateTime and time") {
  CHECK_FALSE(
      xsd::literal_is_ill_typed(lit("2024-01-02T03:04:05", "dateTime")));
  CHECK_FALSE(
      xsd::literal_is_ill_typed(lit("2024-01-02T23:59:59.25Z", "dateTime")));
  CHECK_FALSE(
      xsd::literal_is_ill_typed(lit("2024-01-02T24:00:00", "dateTime")));
  CHECK(xsd::literal_is_ill_typed(lit("2024-01-02T24:00:01", "dateTime")));
  CHECK(xsd::literal_is_ill_typed(lit("2024-01-02", "dateTime")));
  CHECK(xsd::literal_is_ill_typed(lit("2024-01-02T03:04", "dateTime")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("12:30:00", "time")));
  CHECK(xsd::literal_is_ill_typed(lit("25:30:00", "time")));
}

TEST_CASE("floats, doubles, booleans") {
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("INF", "double")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("-INF", "float")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("NaN", "double")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("1.5e-3", "double")));
  CHECK(xsd::literal_is_ill_typed(lit("1.5e", "double")));
  CHECK(xsd::literal_is_ill_typed(lit("inf", "double")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("true", "boolean")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("1", "boolean")));
  CHECK(xsd::literal_is_ill_typed(lit("TRUE", "boolean")));
}

TEST_CASE("durations") {
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("P1Y2M3DT4H5M6.7S", "duration")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("-P2D", "duration")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("PT1M", "duration")));
  CHECK(xsd::literal_is_ill_typed(lit("P", "duration")));
  CHECK(xsd::literal_is_ill_typed(lit("PT", "duration")));
  CHECK(xsd::literal_is_ill_typed(lit("P1S", "duration")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("P1Y2M", "yearMonthDuration")));
  CHECK(xsd::literal_is_ill_typed(lit("P1D", "yearMonthDuration")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("P1DT2H", "dayTimeDuration")));
  CHECK(xsd::literal_is_ill_typed(lit("P1Y", "dayTimeDuration")));
}

TEST_CASE("gregorian fragments and binary types") {
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("2024", "gYear")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("2024-05", "gYearMonth")));
  CHECK(xsd::literal_is_ill_typed(lit("2024-13", "gYearMonth")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("--02", "gMonth")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("---31", "gDay")));
  CHECK(xsd::literal_is_ill_typed(lit("---32", "gDay")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("--02-29", "gMonthDay")));
  CHECK(xsd::literal_is_ill_typed(lit("--02-30", "gMonthDay")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("0FB7", "hexBinary")));
  CHECK(xsd::literal_is_ill_typed(lit("0FB", "hexBinary")));
  CHECK(xsd::literal_is_ill_typed(lit("0XYZ", "hexBinary")));
  CHECK_FALSE(xsd::literal_is_ill_typed(lit("AAE=", "base64Binary")));
  CHECK(xsd::literal_is_ill_typed(lit("A!==", "base64Binary")));
}

TEST_CASE("unknown datatypes are never ill-typed") {
  CHECK_FALSE(xsd::literal_is_ill_typed(
      Term::literal("anything", "http://ex.org/customType")));
  CHECK_FALSE(xsd::literal_is_ill_typed(Term::plain("plain")));
  CHECK_FALSE(xsd::literal_is_ill_typed(Term::lang_literal("x", "en")));
  CHECK_FALSE(xsd::literal_is_ill_typed(
      Term::literal("weird", vocab::XSD + "QName")));
}

TEST_CASE("canonical values are never ill-typed (property)") {
  // Canonical printers for a few datatypes: every printed form must pass.
  for (int i = -500; i < 500; i += 7) {
    CHECK_FALSE(
        xsd::literal_is_ill_typed(lit(std::to_string(i), "integer")));
  }
  for (int y = 1990; y < 2030; ++y) {
    for (int m : {1, 2, 6, 12}) {
      for (int d : {1, 28}) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
        CHECK_FALSE(xsd::literal_is_ill_typed(lit(buf, "date")));
      }
    }
  }
}

TEST_CASE("typed comparison") {
  auto cmp = [&](const Term& a, const Term& b) {
    return xsd::compare_literals(a, b);
  };
  CHECK(cmp(lit("2", "integer"), lit("10", "integer")) == -1);
  CHECK(cmp(lit("2.5", "decimal"), lit("2", "integer")) == 1);
  CHECK(cmp(lit("2.0", "decimal"), lit("2", "integer")) == 0);
  CHECK(cmp(lit("2020-01-01", "date"), lit("2021-06-01", "date")) == -1);
  CHECK(cmp(lit("2024-02-29", "date"), lit("2024-03-01", "date")) == -1);
  CHECK(cmp(lit("2024-01-01T10:00:00Z", "dateTime"),
            lit("2024-01-01T11:00:00+02:00", "dateTime")) == 1);
  CHECK_FALSE(cmp(lit("abc", "integer"), lit("2", "integer")).has_value());
  CHECK_FALSE(cmp(Term::plain("x"), lit("2", "integer")).has_value());
  CHECK(cmp(Term::plain("a"), Term::plain("b")) == -1);
  CHECK_FALSE(
      cmp(lit("2020-01-01", "date"), lit("2", "integer")).has_value());
}
