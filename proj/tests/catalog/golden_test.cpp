#include "golden_check.hpp"

#include "doctest.h"

// Golden-file fidelity: every template (and each CN9 variant with its own
// listing) must render to a constraint tree structurally equal to the
// hand-transcribed listing.

TEST_CASE("all 64 templates and 4 variant listings match their goldens") {
  auto outcomes =
      dqa::goldencheck::check_all(std::string(DQA_TEST_DIR) + "/golden");
  CHECK(outcomes.size() == 68);
  for (const auto& o : outcomes) {
    CHECK_MESSAGE(o.passed, o.name, ": ", o.detail);
  }
}
