#pragma once

// Named verification suites. Each suite runs exhaustive or exact checks and
// reports, per check, the smallest counterexample in diagram text format.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kncross {

struct VerifyOptions {
  int n_max = 7;
  int k = 3;
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<std::string> counterexample;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

using SuiteFunction = SuiteReport (*)(const VerifyOptions&);

struct SuiteEntry {
  std::string_view name;
  SuiteFunction run;
};

/// diagrams, tableaux, duality, theorem3, enumerate, rho3, walks, series,
/// asymptotics.
const std::vector<SuiteEntry>& suite_registry();

/// Runs one suite, or every suite for "all". Unknown names throw a parse error.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options);

}  // namespace kncross
