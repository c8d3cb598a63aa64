#pragma once

// Exact rational arithmetic used everywhere in the library.  No floating
// point is permitted anywhere in polynomial or circuit evaluation, so the
// coefficient type is an arbitrary-precision rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace homopoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "123", "-7/2", "0".  Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// q^e for e >= 0 (0^0 == 1 by convention, matching empty products).
Rational pow_rational(const Rational& base, unsigned long exp);

}  // namespace homopoly
