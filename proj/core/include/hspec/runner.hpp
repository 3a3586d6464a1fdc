#pragma once

// Named verification checks and the driver that runs them.

#include <cstdint>
#include <string>
#include <vector>

#include "hspec/report.hpp"

namespace hspec {

enum class Format { json, csv };

Format parse_format(const std::string& name);

struct RunConfig {
  int p = 3;
  int k = 1;
  // Check names, or "all" for every check that applies to (p, k).
  std::vector<std::string> checks{"all"};
  std::uint64_t seed = 0;
  // Wall-clock limit in seconds; 0 disables it.
  double budget_seconds = 0;
  Format format = Format::json;
  // Report path; empty means no file is written.
  std::string out;
  // Run parameters outside the feasibility table.
  bool allow_large = false;
};

enum ExitCode : int { kPass = 0, kFailure = 1, kConfigError = 2, kBudgetExceeded = 3 };

// Every known check name, in report order.
const std::vector<std::string>& check_names();
// The names "all" expands to for these parameters.
std::vector<std::string> applicable_checks(int p, int k);

struct RunOutcome {
  int exit_code = kPass;
  std::string message;  // set for config and budget errors
  Report report;
  std::string rendered;  // report in the configured format
};

// Never throws for bad input: configuration problems come back as
// kConfigError and infeasible parameters or an exhausted budget as
// kBudgetExceeded. Checks run concurrently; the report lists them in the
// order of check_names().
RunOutcome run(const RunConfig& config);

// HSPEC_ALLOW_LARGE set to a non-empty value other than "0".
bool allow_large_from_env();

}  // namespace hspec
