#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gaudin {

/// Arbitrary-precision rational; every coefficient in the library is one of these.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals ("0,1,1/2").
std::vector<Rational> parse_rational_list(std::string_view text);

/// Lowest-terms rendering, "p" or "p/q".
std::string to_string(const Rational& q);

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gaudin
