#include "bruhat/verify.hpp"

#include <ostream>

namespace bruhat {

std::vector<CheckResult> run_fixture_suite(std::ostream& out, const std::string& cache_dir) {
  (void)out;
  (void)cache_dir;
  return {};
}

}  // namespace bruhat
