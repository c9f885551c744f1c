#ifndef PROLONG_REPORT_HPP
#define PROLONG_REPORT_HPP

#include <string>
#include <vector>

namespace prolong {

/// One named verification with outcome; detail is free-form (dimensions,
/// counterexample coordinates, ...).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<CheckResult>& checks);

} // namespace prolong

#endif
