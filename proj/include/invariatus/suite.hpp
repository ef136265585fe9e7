#pragma once

#include <string>
#include <vector>

#include "invariatus/serialize.hpp"

namespace invariatus {

struct CheckResult {
  /// Stable across releases, e.g. "example/mixed-2x4x8" or "corpus/2x4/chart".
  std::string id;
  /// What the check reproduces, in words.
  std::string anchor;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  /// Sorted by id.
  std::vector<CheckResult> checks;
  /// Subgroups found strictly but not strongly invariant.
  std::vector<std::string> conjecture_counterexamples;
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
};

/// The worked examples, counterexamples and finite theorems.
SuiteResult run_example_suite(unsigned jobs = 1);

struct CorpusOptions {
  Integer max_order = 64;
  int max_rank = 4;
  unsigned jobs = 1;
};

/// Every law of the invariance module on every group of the corpus.
SuiteResult run_corpus_suite(const CorpusOptions& options);

/// Wall time is left out so that output is identical across runs.
Json to_json(const SuiteResult& s);
/// One line per check: "PASS id  anchor [detail]", then a summary line.
std::string format_text(const SuiteResult& s, bool failures_only = false);

}  // namespace invariatus
