#pragma once

// Verification suites: each check records what it compares against.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twoclosed/graphauto.hpp"
#include "twoclosed/permgroup.hpp"

namespace twoclosed {

struct CheckResult {
  std::string suite;
  std::string name;
  /// "STATED", "DERIVED" or "TRIVIAL".
  std::string provenance;
  /// Acceptance criterion the check belongs to (1-6).
  int criterion = 0;
  bool passed = false;
  bool extended = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  unsigned threads = 1;
  /// Called with a short message before long steps.
  std::function<void(const std::string&)> progress;
};

std::vector<std::string> suite_names();
/// Throws ValidationError for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts = {});
nlohmann::json to_json(const std::vector<CheckResult>& results);

/// Transitive and intransitive groups of small degree used by the property
/// checks.
std::vector<std::pair<std::string, PermGroup>> group_corpus();
/// Graphs and digraphs; the first ones have at most 8 vertices.
std::vector<std::pair<std::string, ColoredDigraph>> graph_corpus();

}  // namespace twoclosed
