#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace escapelab {

struct VerifyOptions {
  std::uint64_t seed = 20240521;
  std::uint64_t mc_samples = 1'000'000;
  std::size_t workers = 0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// oracle, correlation, gf-identity, theta-agreement, main-theorem, dominance,
// monotonicity, local, sizes, bighole, conjugacy, monte-carlo
const std::vector<std::string>& suite_names();

// Runs one suite by name; "all" is handled by run_suites.
CheckResult run_suite(std::string_view name, const VerifyOptions& options = {});
std::vector<CheckResult> run_suites(std::string_view name, const VerifyOptions& options = {});

}  // namespace escapelab
