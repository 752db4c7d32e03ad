#pragma once

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "dqa/measures.hpp"
#include "dqa/shacl/report.hpp"

namespace dqa {

namespace outputs_detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline const char* kind_name(catalog::MeasureKind k) {
  switch (k) {
    case catalog::MeasureKind::Binary: return "binary";
    case catalog::MeasureKind::Ratio: return "ratio";
    case catalog::MeasureKind::Composite: return "composite";
    case catalog::MeasureKind::ReportOnly: return "report-only";
  }
  return "?";
}

inline std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace outputs_detail

// RFC 4180, UTF-8, LF line endings; one row per measure.
inline std::string measures_to_csv(const std::vector<MeasureRecord>& records) {
  using namespace outputs_detail;
  std::string out =
      "group,dimension,metric_id,measure_kind,shape_count,violations,"
      "denominator,raw_violation_ratio,conformance_score,applicable\n";
  for (const auto& r : records) {
    out += csv_field(r.group) + "," + csv_field(r.dimension) + "," +
           csv_field(r.metric_id) + "," + kind_name(r.kind) + "," +
           std::to_string(r.shape_count) + "," + std::to_string(r.violations) +
           ",";
    out += r.denominator ? std::to_string(*r.denominator) : "";
    out += ",";
    // Binary measures print the conformance bit only.
    if (r.kind != catalog::MeasureKind::Binary && r.raw_violation_ratio)
      out += number(*r.raw_violation_ratio);
    out += ",";
    if (r.conformance_score) {
      out += r.kind == catalog::MeasureKind::Binary
                 ? std::to_string(static_cast<int>(*r.conformance_score))
                 : number(*r.conformance_score);
    }
    out += ",";
    out += r.applicable ? "true" : "false";
    out += "\n";
  }
  return out;
}

inline nlohmann::json measures_to_json(
    const std::vector<MeasureRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json item;
    item["group"] = r.group;
    item["dimension"] = r.dimension;
    item["metric_id"] = r.metric_id;
    item["measure_kind"] = outputs_detail::kind_name(r.kind);
    item["shape_ids"] = r.shape_ids;
    item["violations"] = r.violations;
    if (r.denominator) item["denominator"] = *r.denominator;
    if (r.raw_violation_ratio)
      item["raw_violation_ratio"] = *r.raw_violation_ratio;
    if (r.conformance_score) item["conformance_score"] = *r.conformance_score;
    item["applicable"] = r.applicable;
    out.push_back(std::move(item));
  }
  return out;
}

// Static, self-contained summary: tables of measures grouped by dimension,
// derived from the records alone.
inline std::string measures_to_html(const std::vector<MeasureRecord>& records) {
  using namespace outputs_detail;
  std::string out = R"(<!DOCTYPE html>
<html lang="en"><head><meta charset="utf-8">
<title>Data quality assessment summary</title>
<style>
body { font-family: sans-serif; margin: 2em; }
table { border-collapse: collapse; margin-bottom: 2em; }
th, td { border: 1px solid #999; padding: 0.3em 0.8em; text-align: left; }
th { background: #eee; }
caption { font-weight: bold; text-align: left; padding: 0.5em 0; }
td.na { color: #888; }
</style></head><body>
<h1>Data quality assessment summary</h1>
)";
  std::vector<std::pair<std::string, std::string>> sections;
  for (const auto& r : records) {
    auto key = std::make_pair(r.group, r.dimension);
    if (std::find(sections.begin(), sections.end(), key) == sections.end())
      sections.push_back(key);
  }
  for (const auto& [group, dimension] : sections) {
    out += "<table><caption>" + html_escape(group) + " / " +
           html_escape(dimension) + "</caption>\n";
    out += "<tr><th>Metric</th><th>Kind</th><th>Shapes</th><th>Violations"
           "</th><th>Denominator</th><th>Violation ratio</th>"
           "<th>Conformance</th></tr>\n";
    for (const auto& r : records) {
      if (r.group != group || r.dimension != dimension) continue;
      out += "<tr><td>" + html_escape(r.metric_id) + "</td><td>" +
             kind_name(r.kind) + "</td><td>" + std::to_string(r.shape_count) +
             "</td><td>" + std::to_string(r.violations) + "</td>";
      out += r.denominator
                 ? "<td>" + std::to_string(*r.denominator) + "</td>"
                 : "<td class=\"na\">&mdash;</td>";
      out += r.raw_violation_ratio && r.kind != catalog::MeasureKind::Binary
                 ? "<td>" + number(*r.raw_violation_ratio) + "</td>"
                 : "<td class=\"na\">&mdash;</td>";
      if (r.conformance_score) {
        out += "<td>" + number(*r.conformance_score) + "</td>";
      } else {
        out += "<td class=\"na\">not applicable</td>";
      }
      out += "</tr>\n";
    }
    out += "</table>\n";
  }
  out += "</body></html>\n";
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace dqa
