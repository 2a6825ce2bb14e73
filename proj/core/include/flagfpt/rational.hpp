#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace flagfpt {

/// Exact rational used for every threshold value. boost::rational keeps the
/// value normalized: gcd(num, den) == 1 and den > 0.
///
/// Compare only against other Rationals (`q < Rational(0)`, not `q < 0`):
/// Boost 1.74's mixed rational/integer comparisons recurse without end under
/// C++20 rewritten comparison operators.
using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace flagfpt
