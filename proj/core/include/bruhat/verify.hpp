#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace bruhat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The paper-fixtures verification suite; shared by the CLI `verify`
// subcommand and the acceptance test binary. Prints one line per check.
std::vector<CheckResult> run_fixture_suite(std::ostream& out, const std::string& cache_dir = "");

}  // namespace bruhat
