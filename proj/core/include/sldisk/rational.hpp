#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace sldisk {

// Arbitrary-precision rational, always canonical: denominator > 0, gcd(num, den) = 1.
// The backend canonicalizes after every arithmetic operation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts "p" or "p/q" with optional leading '-' on p; q must be a positive integer.
// The result is canonical even if the input is not ("2/4" parses to 1/2).
Rational parse_rational(const std::string& text);

// Emits "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

inline Integer numerator(const Rational& value) { return boost::multiprecision::numerator(value); }
inline Integer denominator(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

inline int sign_of(const Rational& value) { return value.sign(); }

inline Rational rational_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace sldisk
