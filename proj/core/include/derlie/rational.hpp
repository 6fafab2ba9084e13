#ifndef DERLIE_RATIONAL_HPP
#define DERLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace derlie {

/// Exact rational scalar. Everything in this library computes over Q;
/// there is no floating point anywhere.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

/// Canonicalized rational from an integer pair. mpq_class(p, q) does not
/// reduce by itself, so always construct through this.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool isZero(const Rat& r) { return sgn(r) == 0; }

inline std::string toString(const Rat& r) { return r.get_str(); }

}  // namespace derlie

#endif
