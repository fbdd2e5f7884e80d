#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lvc {

struct CaseOutcome {
  bool pass = false;
  std::string detail;
};

// One reproduction check. Criterion numbers group cases under the acceptance
// criteria; criterion 0 marks informational extras that never fail the run.
struct SuiteCase {
  std::string name;
  int criterion = 0;
  std::string generators;  // inputs, in gen: URI form or a corpus summary
  std::string method;
  std::string expected;    // distinguished | not_distinguished | property-pass
  std::string provenance;  // literature | definition | computed
  std::function<CaseOutcome()> run;
};

// All cases sorted by name. The seed only drives the informational witness
// search; every corpus underneath the numbered criteria is fixed.
std::vector<SuiteCase> all_cases(std::uint64_t seed);

struct SuiteReport {
  nlohmann::json json;
  bool all_pass = true;
  int total = 0;
  int failed = 0;
  std::string summary;  // one PASS/FAIL line per executed case
};

// Runs every case whose name contains filter (empty = all).
SuiteReport run_suite(const std::string& filter, std::uint64_t seed);

}  // namespace lvc
