#pragma once

// Executable checks of the structural claims the library is built around,
// numbered 1 to 13.

#include <string>
#include <vector>

#include <json.hpp>

namespace chaingeo {

struct CheckResult {
  int id = 0;
  std::string claim;
  bool passed = false;
  std::string detail;  // counts on success, a counterexample on failure
};

inline constexpr int kCheckCount = 13;

/// One check by number; Domain for an unknown id. Exceptions thrown inside a
/// check are caught and reported as a failure.
CheckResult run_check(int id);
std::vector<CheckResult> run_all();

nlohmann::json to_json(const CheckResult& r);
/// Fixed-width table, one row per check.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace chaingeo
