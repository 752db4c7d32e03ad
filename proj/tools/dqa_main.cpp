#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dqa/manifest.hpp"
#include "dqa/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "dqa - SHACL-based batch data-quality assessment for RDF graphs"};

  dqa::RunOptions opts;
  std::string formats = "csv,json,ttl,html";
  std::string catalog_manifest_path;

  app.add_option("--data", opts.data_path,
                 "Data graph (Turtle or N-Triples)");
  app.add_option("--ontology", opts.ontology_paths,
                 "Ontology file (repeatable)");
  app.add_option("--vocab", opts.vocab_paths,
                 "Vocabulary file (repeatable)");
  app.add_option("--metadata", opts.metadata_path,
                 "VoID/DCAT description of the dataset");
  app.add_option("--config", opts.config_path, "Configuration file (JSON)");
  app.add_option("--base-iri", opts.base_iri,
                 "Base IRI for resolving relative references");
  app.add_option("--out", opts.out_dir, "Output directory");
  app.add_option("--format", formats,
                 "Comma-separated outputs: csv,json,ttl,html");
  app.add_option("--emit-shapes", opts.emit_shapes_dir,
                 "Dump instantiated shapes as Turtle into this directory");
  app.add_option("--log-level", opts.log_level, "info (default) or quiet");
  app.add_option("--catalog-manifest", catalog_manifest_path,
                 "Write the shape-catalog manifest as JSON and exit");

  CLI11_PARSE(app, argc, argv);

  if (!catalog_manifest_path.empty()) {
    try {
      dqa::write_file(catalog_manifest_path,
                      dqa::catalog_manifest().dump(2) + "\n");
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  if (opts.data_path.empty()) {
    std::cerr << "error: --data is required\n\n" << app.help() << "\n";
    return 1;
  }

  if (opts.out_dir == "./dqa-out") {
    if (const char* env = std::getenv("DQA_OUT")) opts.out_dir = env;
  }

  opts.formats.clear();
  std::stringstream ss(formats);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "csv" && item != "json" && item != "ttl" && item != "html") {
      std::cerr << "error: unknown format \"" << item << "\"\n";
      return 1;
    }
    opts.formats.insert(item);
  }

  return dqa::run(opts);
}
