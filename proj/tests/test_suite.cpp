#include <algorithm>

#include "doctest.h"
#include "invariatus/suite.hpp"

using namespace invariatus;

TEST_CASE("corpus suite on small groups") {
  const auto s = run_corpus_suite({12, 4, 1});
  CHECK(s.passed());
  CHECK(s.failures() == 0);
  CHECK(s.conjecture_counterexamples.empty());
  CHECK(std::is_sorted(s.checks.begin(), s.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
  const auto j = to_json(s);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(j["checks"].size() == s.checks.size());
  CHECK(j.dump() == to_json(run_corpus_suite({12, 4, 3})).dump());
  const auto text = format_text(s);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("0 conjecture counterexamples") != std::string::npos);
  CHECK(format_text(s, true) == "corpus: " + std::to_string(s.checks.size()) + "/" +
                                    std::to_string(s.checks.size()) +
                                    " checks passed, 0 conjecture counterexamples\n");
}

TEST_CASE("corpus suite covers the per-group laws") {
  const auto s = run_corpus_suite({9, 4, 1});
  std::size_t socles = 0, decomposition = 0;
  for (const auto& c : s.checks) {
    if (c.id.ends_with("/socles")) ++socles;
    if (c.id.ends_with("/decomposition")) ++decomposition;
  }
  // p-groups up to 9: 2, 3, 4, 2x2, 5, 7, 8, 2x4, 2x2x2, 9, 3x3.
  CHECK(socles == 11);
  // Odd groups of rank two: 3x3.
  CHECK(decomposition == 1);
}

TEST_CASE("suite options are validated") {
  CHECK_THROWS_AS(run_corpus_suite({0, 4, 1}), InvalidInput);
  CHECK_THROWS_AS(run_corpus_suite({8, 0, 1}), InvalidInput);
}
