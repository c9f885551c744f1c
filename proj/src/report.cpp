#include "prolong/report.hpp"

namespace prolong {

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

} // namespace prolong
