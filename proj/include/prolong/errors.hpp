#ifndef PROLONG_ERRORS_HPP
#define PROLONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prolong {

/// Bad user input: unknown structure, out-of-range rank, malformed bundle spec.
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed a configured size cap.  Raise the cap to proceed.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact cross-check failed.  Either the inputs are inconsistent or there
/// is a bug; nothing is approximate here, so this is never a tolerance issue.
class verification_error : public std::runtime_error {
public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant broken (programming error, not user error).
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw config_error(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

} // namespace prolong

#endif
