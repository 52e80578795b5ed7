#pragma once

#include <string>
#include <vector>

namespace quasiprob {

struct CheckResult {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// Suites: "series", "transforms", "mixtures", "quasibayes", "wigner", "all".
// tol_override > 0 replaces every check's default tolerance (forced-failure
// plumbing for the CLI).
std::vector<CheckResult> verify_suite(const std::string& suite, double tol_override = 0.0);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace quasiprob
