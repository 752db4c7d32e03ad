#include <filesystem>
#include <fstream>
#include <sstream>

#include "acceptance.hpp"
#include "dqa/pipeline.hpp"

namespace dqa::acceptance {

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

CriterionResult run_criterion_determinism() {
  CriterionResult r;
  r.number = 6;
  r.title = "byte-identical measures.csv and validation-report.json";
  Stopwatch watch;

  fs::path dir = fs::temp_directory_path() / "dqa_det";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream data(dir / "data.ttl");
    data << R"(
@prefix ex: <http://e/> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
ex:a a ex:City ; rdfs:label "A"@en ; owl:sameAs <http://other.org/a> .
ex:b a ex:City ; rdfs:label "B" .
<http://e/c#x> a ex:City .
_:bn a ex:City .
)";
    std::ofstream vocab(dir / "vocab.ttl");
    vocab << R"(
@prefix ex: <http://e/> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
ex:City a owl:Class ; rdfs:label "City" .
ex:Town a owl:Class .
)";
  }

  RunOptions opts;
  opts.data_path = (dir / "data.ttl").string();
  opts.vocab_paths = {(dir / "vocab.ttl").string()};
  opts.log_level = "quiet";

  opts.out_dir = (dir / "out1").string();
  int rc1 = run(opts);
  opts.out_dir = (dir / "out2").string();
  int rc2 = run(opts);

  bool same_csv =
      slurp(dir / "out1/measures.csv") == slurp(dir / "out2/measures.csv");
  bool same_json = slurp(dir / "out1/validation-report.json") ==
                   slurp(dir / "out2/validation-report.json");
  bool nonempty = slurp(dir / "out1/measures.csv").size() > 100;

  r.seconds = watch.seconds();
  r.passed = rc1 == 0 && rc2 == 0 && same_csv && same_json && nonempty;
  r.detail = r.passed ? "two consecutive runs byte-identical"
             : !same_csv ? "measures.csv differs"
             : !same_json ? "validation-report.json differs"
                          : "run failed";
  fs::remove_all(dir);
  return r;
}

}  // namespace dqa::acceptance
