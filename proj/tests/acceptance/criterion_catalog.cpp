#include "../catalog/golden_check.hpp"
#include "acceptance.hpp"

namespace dqa::acceptance {

CriterionResult run_criterion_catalog() {
  CriterionResult r;
  r.number = 1;
  r.title = "catalog fidelity: 64 templates + 4 variant listings vs goldens";
  Stopwatch watch;
  auto outcomes =
      goldencheck::check_all(std::string(DQA_TEST_DIR) + "/golden");
  size_t passed = 0;
  for (const auto& o : outcomes) {
    if (o.passed) {
      ++passed;
    } else if (r.detail.empty()) {
      r.detail = o.name + ": " + o.detail.substr(0, 200);
    }
  }
  r.seconds = watch.seconds();
  r.passed = passed == outcomes.size() && outcomes.size() == 68 &&
             r.seconds < 5.0;
  if (r.passed)
    r.detail = std::to_string(passed) + "/" + std::to_string(outcomes.size()) +
               " listings structurally equal";
  return r;
}

}  // namespace dqa::acceptance
