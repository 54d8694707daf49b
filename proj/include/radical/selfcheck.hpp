#pragma once

#include <string>
#include <vector>

namespace radical::selfcheck {

// One named verification suite run at the library's production tolerances.
struct SuiteResult {
  std::string name;
  bool passed;
  long cases;
  double max_error;  // largest observed distance bound where applicable, else 0
  std::string detail;
};

// Suites: "roundtrip", "theorem3", "limits", "vieta". Unknown names throw
// std::domain_error. "all" is handled by the caller via suite_names().
SuiteResult run_suite(const std::string& name);

const std::vector<std::string>& suite_names();

}  // namespace radical::selfcheck
