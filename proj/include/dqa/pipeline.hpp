#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dqa/config.hpp"
#include "dqa/enrich.hpp"
#include "dqa/measures.hpp"
#include "dqa/outputs.hpp"
#include "dqa/plan.hpp"
#include "dqa/profile.hpp"
#include "dqa/rdf/turtle.hpp"
#include "dqa/shacl/engine.hpp"
#include "dqa/shacl/report.hpp"
#include "dqa/shacl/shapes_io.hpp"

namespace dqa {

struct RunOptions {
  std::string data_path;
  std::vector<std::string> ontology_paths;
  std::vector<std::string> vocab_paths;
  std::optional<std::string> metadata_path;
  std::optional<std::string> config_path;
  std::optional<std::string> base_iri;
  std::string out_dir = "./dqa-out";
  std::set<std::string> formats = {"csv", "json", "ttl", "html"};
  std::optional<std::string> emit_shapes_dir;
  std::string log_level = "info";
};

// Everything a run produced, for callers that want more than files.
struct RunResult {
  int exit_code = 0;
  std::string error;
  Config config;
  EnrichmentReport enrichment;
  ProfileSummary profile;
  Plan shape_plan;
  shacl::ValidationReport report;
  std::vector<MeasureRecord> measures;
};

namespace pipeline_detail {

inline rdf::RdfFormat format_of(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  return ext == "nt" || ext == "ntriples" ? rdf::RdfFormat::NTriples
                                          : rdf::RdfFormat::Turtle;
}

inline Graph load_file(const std::string& path,
                       const std::optional<std::string>& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return rdf::load_graph(buf.str(), format_of(path), base);
}

inline std::string sanitize_filename(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
            c == '_' || c == '.')
               ? c
               : '_';
  return out;
}

}  // namespace pipeline_detail

// The five-step pipeline: load, enrich, profile, plan, validate, measure.
// Throws on input errors; callers map exceptions to exit codes.
inline RunResult run_pipeline(const RunOptions& opts) {
  RunResult result;
  result.config = opts.config_path ? load_config(*opts.config_path) : Config{};
  const Config& cfg = result.config;

  Graph raw_data = pipeline_detail::load_file(opts.data_path, opts.base_iri);
  std::vector<Graph> schemas;
  for (const auto& p : opts.ontology_paths)
    schemas.push_back(pipeline_detail::load_file(p, opts.base_iri));
  for (const auto& p : opts.vocab_paths)
    schemas.push_back(pipeline_detail::load_file(p, opts.base_iri));
  std::optional<Graph> metadata;
  if (opts.metadata_path)
    metadata = pipeline_detail::load_file(*opts.metadata_path, opts.base_iri);

  // Pre-processing: materialize schema typings in the merged data graph
  // and in the schema-only artifact.
  auto [enriched, enrichment] = enrich(raw_data, schemas);
  result.enrichment = enrichment;
  Graph schema_artifact = enrich_schemas(schemas);

  result.profile = profile(enriched, raw_data, schema_artifact,
                           metadata ? &*metadata : nullptr, cfg);

  result.shape_plan = plan(result.profile, cfg, metadata.has_value(),
                           !schemas.empty());

  // Validate per target artifact, then merge deterministically.
  std::vector<shacl::RootShape> data_shapes, schema_shapes, metadata_shapes;
  for (const auto& s : result.shape_plan.shapes) {
    switch (s.artifact) {
      case catalog::Artifact::DataGraph: data_shapes.push_back(s.root); break;
      case catalog::Artifact::SchemaGraph:
        schema_shapes.push_back(s.root);
        break;
      case catalog::Artifact::MetadataGraph:
        metadata_shapes.push_back(s.root);
        break;
    }
  }
  auto merge = [&](shacl::ValidationReport&& part) {
    for (auto& r : part.results) result.report.results.push_back(std::move(r));
    for (auto& [id, n] : part.per_shape_counts)
      result.report.per_shape_counts[id] = n;
    for (auto& e : part.errors) result.report.errors.push_back(std::move(e));
  };
  merge(shacl::validate(enriched, data_shapes));
  merge(shacl::validate(schema_artifact, schema_shapes));
  if (metadata) {
    merge(shacl::validate(*metadata, metadata_shapes));
  }
  std::stable_sort(
      result.report.results.begin(), result.report.results.end(),
      [](const shacl::ValidationResult& a, const shacl::ValidationResult& b) {
        auto key = [](const shacl::ValidationResult& r) {
          return std::make_tuple(r.source_shape_id, rdf::to_ntriples(r.focus),
                                 r.result_path ? r.result_path->str() : "",
                                 r.value ? rdf::to_ntriples(*r.value) : "");
        };
        return key(a) < key(b);
      });
  result.report.conforms = result.report.results.empty();

  result.measures =
      compute_all(result.report, result.shape_plan.shapes, result.profile);
  return result;
}

inline void write_outputs(const RunResult& result, const RunOptions& opts) {
  namespace fs = std::filesystem;
  fs::create_directories(opts.out_dir);
  auto path = [&](const std::string& name) {
    return (fs::path(opts.out_dir) / name).string();
  };

  if (opts.formats.count("csv"))
    write_file(path("measures.csv"), measures_to_csv(result.measures));
  if (opts.formats.count("json")) {
    nlohmann::json report = shacl::report_to_json(result.report);
    write_file(path("validation-report.json"), report.dump(2) + "\n");
    write_file(path("measures.json"),
               measures_to_json(result.measures).dump(2) + "\n");
  }
  if (opts.formats.count("ttl"))
    write_file(path("validation-report.ttl"),
               shacl::report_to_turtle(result.report));
  if (opts.formats.count("html"))
    write_file(path("summary.html"), measures_to_html(result.measures));

  // Run log: what was skipped and why, plus headline numbers.
  std::string log;
  log += "entities: " + std::to_string(result.profile.entity_count) + "\n";
  log += "triples: " + std::to_string(result.profile.triple_count) + "\n";
  log += "shapes instantiated: " +
         std::to_string(result.shape_plan.shapes.size()) + "\n";
  log += "violations: " + std::to_string(result.report.results.size()) + "\n";
  for (const auto& e : result.report.errors)
    log += "shape error: " + e.shape_id + ": " + e.message + "\n";
  for (const auto& s : result.shape_plan.skipped)
    log += "skipped " + s.template_id + ": " + s.reason + "\n";
  write_file(path("run.log"), log);

  if (opts.emit_shapes_dir) {
    fs::create_directories(*opts.emit_shapes_dir);
    for (const auto& s : result.shape_plan.shapes) {
      write_file((fs::path(*opts.emit_shapes_dir) /
                  (pipeline_detail::sanitize_filename(s.shape_id) + ".ttl"))
                     .string(),
                 shacl::write_shapes_turtle({s.root}));
    }
  }
}

// CLI entry point semantics: 0 success, 1 input error, 2 internal error.
inline int run(const RunOptions& opts) {
  try {
    if (opts.data_path.empty()) {
      std::cerr << "error: --data is required\n";
      return 1;
    }
    RunResult result = run_pipeline(opts);
    write_outputs(result, opts);
    if (opts.log_level != "quiet") {
      std::cerr << "dqa: " << result.profile.entity_count << " entities, "
                << result.shape_plan.shapes.size() << " shapes, "
                << result.report.results.size() << " violations, "
                << result.measures.size() << " measures -> " << opts.out_dir
                << "\n";
    }
    return 0;
  } catch (const rdf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    if (msg.rfind("cannot read", 0) == 0) {
      std::cerr << "error: " << msg << "\n";
      return 1;
    }
    std::cerr << "internal error: " << msg << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dqa
