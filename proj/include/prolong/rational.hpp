#ifndef PROLONG_RATIONAL_HPP
#define PROLONG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace prolong {

/// All linear algebra in this library is exact.  Rat is an arbitrary-precision
/// rational and Int an arbitrary-precision integer, both GMP-backed.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

/// Parse "p" or "p/q"; throws std::invalid_argument on garbage.
inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

using RatVec = std::vector<Rat>;

} // namespace prolong

#endif
