#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dqa/catalog.hpp"
#include "dqa/plan.hpp"
#include "dqa/profile.hpp"
#include "dqa/shacl/engine.hpp"

namespace dqa {

// One data-quality measure: the violation tally for a metric together with
// both the raw violation ratio and the conformance score (1 - raw), so
// either reading of the paper's ratio direction is available.
struct MeasureRecord {
  std::string group;
  std::string dimension;
  std::string metric_id;
  catalog::MeasureKind kind = catalog::MeasureKind::Binary;
  std::vector<std::string> shape_ids;
  size_t shape_count = 0;
  size_t violations = 0;
  std::optional<size_t> denominator;
  std::optional<double> raw_violation_ratio;
  std::optional<double> conformance_score;
  bool applicable = true;
};

inline double compute_binary(size_t violations) {
  return violations == 0 ? 1.0 : 0.0;
}

struct RatioResult {
  std::optional<double> raw;
  std::optional<double> conformance;
  bool applicable = false;
};

inline RatioResult compute_ratio(size_t violations, size_t denominator) {
  RatioResult out;
  if (denominator == 0) return out;  // absence of evidence is not failure
  out.applicable = true;
  out.raw = static_cast<double>(violations) / static_cast<double>(denominator);
  out.conformance = 1.0 - *out.raw;
  return out;
}

struct CompositeResult {
  std::vector<std::pair<std::string, double>> individual;  // shape id -> 0/1
  std::optional<double> aggregate;
};

// Individual scores are conformance-directed: 1 when the instantiation has
// no violations. The aggregate is their mean.
inline CompositeResult compute_composite(
    const std::vector<std::pair<std::string, size_t>>& instantiation_results) {
  CompositeResult out;
  if (instantiation_results.empty()) return out;
  double passing = 0;
  for (const auto& [id, violations] : instantiation_results) {
    double score = compute_binary(violations);
    out.individual.emplace_back(id, score);
    passing += score;
  }
  out.aggregate = passing / static_cast<double>(instantiation_results.size());
  return out;
}

namespace measures_detail {

inline size_t denominator_value(catalog::Denominator d,
                                const ProfileSummary& profile) {
  switch (d) {
    case catalog::Denominator::Entities:
      return profile.entity_count;
    case catalog::Denominator::EntitiesWithInterlink:
      return profile.entities_with_interlink;
    case catalog::Denominator::EntitiesWithLabel:
      return profile.entities_with_label;
    case catalog::Denominator::EntitiesWithDescription:
      return profile.entities_with_description;
    case catalog::Denominator::SchemaClasses:
      return profile.declared.schema_classes.size();
    case catalog::Denominator::SchemaProperties:
      return profile.declared.schema_properties.size();
    case catalog::Denominator::None:
      return 0;
  }
  return 0;
}

inline bool result_matches_metric(const shacl::ValidationResult& r,
                                  const catalog::MetricSpec& metric) {
  if (!metric.result_path_iri.empty()) {
    return r.result_path &&
           *r.result_path == shacl::Path::pred(metric.result_path_iri);
  }
  if (metric.select_node_level) return !r.result_path.has_value();
  return true;
}

inline bool entity_scoped(catalog::Denominator d) {
  switch (d) {
    case catalog::Denominator::Entities:
    case catalog::Denominator::EntitiesWithInterlink:
    case catalog::Denominator::EntitiesWithLabel:
    case catalog::Denominator::EntitiesWithDescription:
      return true;
    default:
      return false;
  }
}

}  // namespace measures_detail

// Derives one MeasureRecord per metric with at least one instantiated
// shape. Report-only shapes keep their results in the validation report
// but produce no record. Deterministic order: (group, dimension, metric).
inline std::vector<MeasureRecord> compute_all(
    const shacl::ValidationReport& report,
    const std::vector<InstantiatedShape>& planned,
    const ProfileSummary& profile) {
  using catalog::MeasureKind;

  std::map<std::string, std::vector<const shacl::ValidationResult*>> by_shape;
  for (const auto& r : report.results)
    by_shape[r.source_shape_id].push_back(&r);

  // Group planned shapes by template.
  std::map<std::string, std::vector<const InstantiatedShape*>> by_template;
  for (const auto& s : planned) by_template[s.template_id].push_back(&s);

  std::vector<MeasureRecord> out;
  for (const auto& [tid, shapes] : by_template) {
    const auto* tmpl = catalog::find_template(tid);
    if (!tmpl) continue;
    for (const auto& metric : tmpl->metrics) {
      if (metric.kind == MeasureKind::ReportOnly) continue;
      MeasureRecord rec;
      rec.group = tmpl->group;
      rec.dimension = tmpl->dimension;
      rec.metric_id = metric.metric_id;
      rec.kind = metric.kind;
      rec.shape_count = shapes.size();
      for (const auto* s : shapes) rec.shape_ids.push_back(s->shape_id);

      if (metric.kind == MeasureKind::Composite) {
        std::vector<std::pair<std::string, size_t>> per_instantiation;
        for (const auto* s : shapes) {
          size_t n = 0;
          auto it = by_shape.find(s->shape_id);
          if (it != by_shape.end()) {
            for (const auto* r : it->second)
              if (measures_detail::result_matches_metric(*r, metric)) ++n;
          }
          per_instantiation.emplace_back(s->shape_id, n);
          rec.violations += n;
        }
        auto composite = compute_composite(per_instantiation);
        rec.applicable = composite.aggregate.has_value();
        rec.conformance_score = composite.aggregate;
        if (composite.aggregate)
          rec.raw_violation_ratio = 1.0 - *composite.aggregate;
      } else if (metric.kind == MeasureKind::Ratio) {
        // One violation per focus node; entity-denominator metrics count
        // only focus nodes inside the profiled entity set, so merged-in
        // schema terms cannot push a ratio past 1.
        std::set<Term> foci;
        for (const auto* s : shapes) {
          auto it = by_shape.find(s->shape_id);
          if (it == by_shape.end()) continue;
          for (const auto* r : it->second) {
            if (!measures_detail::result_matches_metric(*r, metric)) continue;
            if (measures_detail::entity_scoped(metric.denominator) &&
                !profile.is_entity(r->focus))
              continue;
            foci.insert(r->focus);
          }
        }
        rec.violations = foci.size();
        size_t den = measures_detail::denominator_value(metric.denominator,
                                                        profile);
        auto ratio = compute_ratio(rec.violations, den);
        rec.applicable = ratio.applicable;
        if (ratio.applicable) rec.denominator = den;
        rec.raw_violation_ratio = ratio.raw;
        rec.conformance_score = ratio.conformance;
      } else {  // Binary
        for (const auto* s : shapes) {
          auto it = by_shape.find(s->shape_id);
          if (it == by_shape.end()) continue;
          for (const auto* r : it->second)
            if (measures_detail::result_matches_metric(*r, metric))
              ++rec.violations;
        }
        rec.applicable = true;
        rec.conformance_score = compute_binary(rec.violations);
      }
      out.push_back(std::move(rec));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const MeasureRecord& a, const MeasureRecord& b) {
              return std::tie(a.group, a.dimension, a.metric_id) <
                     std::tie(b.group, b.dimension, b.metric_id);
            });
  return out;
}

}  // namespace dqa
