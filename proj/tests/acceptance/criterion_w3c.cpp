#include "../w3c/harness.hpp"
#include "acceptance.hpp"

namespace dqa::acceptance {

CriterionResult run_criterion_w3c() {
  CriterionResult r;
  r.number = 2;
  r.title = "engine conformance on the SHACL-core subset suite";
  Stopwatch watch;
  auto outcome = w3c::run_suite(std::string(DQA_TEST_DIR) + "/w3c");
  r.seconds = watch.seconds();
  for (const auto& c : outcome.cases) {
    if (!c.passed && r.detail.empty())
      r.detail = c.name + ": " + c.detail.substr(0, 200);
  }
  r.passed = outcome.failed == 0 && outcome.cases.size() >= 80 &&
             r.seconds < 30.0;
  if (r.passed)
    r.detail = std::to_string(outcome.passed) + "/" +
               std::to_string(outcome.cases.size()) + " cases";
  return r;
}

}  // namespace dqa::acceptance
