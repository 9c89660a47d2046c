#pragma once

// Invariant suites shared by the CLI and the test binaries.

#include <string>
#include <vector>

#include <json.hpp>

namespace capelli {

struct VerifyBounds {
  int max_h = 3;
  int max_n = 2;
  int n = 2;
  int d = 2;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  /// First counterexample, empty on success.
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs "central", "oracle", "presentations", "recursion", "bases", "projectors" or "all".
/// Throws std::invalid_argument for an unknown suite or nonsensical bounds.
SuiteReport run_suite(const std::string& suite, const VerifyBounds& bounds);

}  // namespace capelli
