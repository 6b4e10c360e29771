#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ovf {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Suites: algebra, octoform, kraines, calibrations, psi8, spin9, all.
// Throws std::invalid_argument for unknown names.
std::vector<CheckResult> verify_suite(const std::string& suite);

std::vector<std::string> verify_suite_names();

// Prints one pass/fail line per check; returns 0 iff every check passed.
int run_verify(const std::string& suite, std::ostream& out);

}  // namespace ovf
