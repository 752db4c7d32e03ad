#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "acceptance.hpp"
#include "dqa/pipeline.hpp"

// Performance envelope: a Temples-sized graph must run in well under a
// minute, a synthetically scaled 1M-triple graph with hundreds of
// instantiated shapes in well under ten minutes, and doubling the triple
// count must not triple the runtime.

namespace dqa::acceptance {

namespace {

namespace fs = std::filesystem;

constexpr int kClasses = 30;
constexpr int kProperties = 100;

// A vocabulary wide enough to instantiate several hundred shapes: every
// property carries a domain and a range; a few are flavored.
std::string synth_vocab() {
  std::string v;
  v += "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n";
  v += "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";
  v += "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";
  v += "@prefix s: <http://synth.org/schema/> .\n";
  for (int c = 0; c < kClasses; ++c) {
    v += "s:Class" + std::to_string(c) + " a owl:Class ; rdfs:label \"Class" +
         std::to_string(c) + "\" .\n";
  }
  for (int p = 0; p < kProperties; ++p) {
    std::string name = "s:p" + std::to_string(p);
    v += name + " a " +
         (p % 10 == 0   ? "owl:InverseFunctionalProperty"
          : p % 10 == 1 ? "owl:FunctionalProperty"
          : p % 10 == 2 ? "owl:IrreflexiveProperty"
          : p % 10 == 3 ? "owl:AsymmetricProperty"
          : p % 2 == 0  ? "owl:DatatypeProperty"
                        : "owl:ObjectProperty") +
         " ; rdfs:label \"p" + std::to_string(p) + "\" ;\n";
    v += "  rdfs:domain s:Class" + std::to_string(p % kClasses) + " ;\n";
    if (p % 2 == 0) {
      v += "  rdfs:range xsd:string .\n";
    } else {
      v += "  rdfs:range s:Class" + std::to_string((p + 1) % kClasses) + " .\n";
    }
  }
  return v;
}

// Streams a mostly conforming N-Triples data graph (~6.5 triples per
// entity). Domains and ranges line up with the schema; a sprinkling of
// planted defects keeps the report non-trivial.
void synth_data(const std::string& path, size_t entities) {
  std::ofstream out(path);
  const std::string E = "http://synth.org/entity/";
  const std::string S = "http://synth.org/schema/";
  const std::string type = "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type>";
  const std::string label = "<http://www.w3.org/2000/01/rdf-schema#label>";
  const std::string comment =
      "<http://www.w3.org/2000/01/rdf-schema#comment>";
  const std::string sameas = "<http://www.w3.org/2002/07/owl#sameAs>";
  for (size_t i = 0; i < entities; ++i) {
    size_t cls = i % kClasses;
    std::string e = "<" + E + "e" + std::to_string(i) + ">";
    out << e << " " << type << " <" << S << "Class" << cls << "> .\n";
    if (i % 503 != 0)  // a few unlabeled entities
      out << e << " " << label << " \"entity " << i << "\"@en .\n";
    out << e << " " << comment << " \"about entity " << i << "\"@en .\n";
    if (i % 2 == 0)
      out << e << " " << sameas << " <http://elsewhere.org/e" << i << "> .\n";
    // Three property triples whose domain matches the entity's class.
    for (int k = 0; k < 3; ++k) {
      size_t p = cls + kClasses * k;
      if (p >= kProperties) continue;
      out << e << " <" << S << "p" << p << "> ";
      if (p % 2 == 0) {
        out << "\"value " << i << "-" << k << "\" .\n";
      } else {
        // Range is Class((p+1)%kClasses): pick a block-mate of that class,
        // mistyped for one entity in a thousand.
        size_t want = (p + 1) % kClasses;
        size_t j = i - cls + want;
        if (i % 997 == 0) j = (j + 1) % entities;
        out << "<" << E << "e" << (j % entities) << "> .\n";
      }
    }
  }
}

double timed_run(const std::string& data, const std::string& vocab,
                 const std::string& out_dir, size_t* shape_count) {
  RunOptions opts;
  opts.data_path = data;
  opts.vocab_paths = {vocab};
  opts.out_dir = out_dir;
  opts.log_level = "quiet";
  Stopwatch watch;
  RunResult run = run_pipeline(opts);
  write_outputs(run, opts);
  if (shape_count) *shape_count = run.shape_plan.shapes.size();
  return watch.seconds();
}

}  // namespace

CriterionResult run_criterion_performance() {
  CriterionResult r;
  r.number = 5;
  r.title = "performance envelope (15K < 60s, 1M < 600s, near-linear)";
  Stopwatch total;

  fs::path dir = fs::temp_directory_path() / "dqa_perf";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string vocab_path = (dir / "vocab.ttl").string();
  {
    std::ofstream v(vocab_path);
    v << synth_vocab();
  }

  // Temples-scale: ~15K triples (~2350 entities at ~6.4 triples each).
  synth_data((dir / "small.nt").string(), 2350);
  double t_small = timed_run((dir / "small.nt").string(), vocab_path,
                             (dir / "out_small").string(), nullptr);

  // Half scale and full scale for the linearity check.
  synth_data((dir / "half.nt").string(), 78000);
  double t_half = timed_run((dir / "half.nt").string(), vocab_path,
                            (dir / "out_half").string(), nullptr);

  size_t shapes_large = 0;
  synth_data((dir / "large.nt").string(), 156000);  // ~1.0M triples
  double t_large = timed_run((dir / "large.nt").string(), vocab_path,
                             (dir / "out_large").string(), &shapes_large);

  double ratio = t_large / (t_half > 1e-9 ? t_half : 1e-9);
  r.seconds = total.seconds();
  char buf[400];
  std::snprintf(buf, sizeof(buf),
                "15K: %.2fs (<60), 1M: %.2fs (<600, %zu shapes), "
                "2x scaling ratio %.2f (<3)",
                t_small, t_large, shapes_large, ratio);
  r.detail = buf;
  r.passed = t_small < 60.0 && t_large < 600.0 && ratio < 3.0 &&
             shapes_large >= 400;
  fs::remove_all(dir);
  return r;
}

}  // namespace dqa::acceptance
