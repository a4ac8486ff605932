#pragma once

#include <gmpxx.h>

#include <string>

namespace lcs {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Renders "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline std::string num_str(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_str(const Rational& q) { return q.get_den().get_str(); }

}  // namespace lcs
