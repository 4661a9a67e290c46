// One PASS/FAIL line per acceptance criterion, then the failing checks.

#include <iostream>
#include <map>

#include "twoclosed/verify.hpp"

using namespace twoclosed;

int main() {
  const std::map<int, std::string> titles{
      {1, "family G(m), m = 2, 3"},
      {2, "family H(2)"},
      {3, "rank-4 semilinear base groups (5,2,1,1,1) and (2,6,1,0,1)"},
      {4, "catalog 49-16, 81-48, 121-23, 2401-663"},
      {5, "subdegree tables"},
      {6, "engine properties"},
  };
  SuiteOptions opts;
  opts.progress = [](const std::string& msg) { std::cerr << "  .. " << msg << std::endl; };
  std::vector<CheckResult> all;
  for (const auto& s : suite_names()) {
    auto r = run_suite(s, opts);
    all.insert(all.end(), r.begin(), r.end());
  }
  std::map<int, std::pair<std::size_t, std::size_t>> tally;
  for (const auto& r : all) {
    auto& [passed, total] = tally[r.criterion];
    ++total;
    passed += r.passed;
  }
  bool ok = true;
  for (const auto& [c, title] : titles) {
    auto [passed, total] = tally[c];
    bool pass = total > 0 && passed == total;
    ok = ok && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c << ": " << title << " (" << passed << "/" << total
              << " checks)\n";
  }
  for (const auto& r : all)
    if (!r.passed) std::cout << "  failed [" << r.suite << "] " << r.name << ": " << r.detail << "\n";
  return ok ? 0 : 1;
}
