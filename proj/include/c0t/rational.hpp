#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace c0t {

/// Exact rational scalar. All geometric predicates are evaluated in this type.
using Rational = mpq_class;

/// Parses "p/q", integers, and decimal strings with optional exponent
/// ("-1.25", "3e-2") into an exact rational. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact binary value of a finite double.
Rational from_double(double value);

/// num/den in canonical form. The two-argument mpq_class constructors do
/// not reduce, and GMP requires canonical operands.
inline Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline Rational ratio(long num, long den) { return ratio(mpz_class(num), mpz_class(den)); }

inline Rational abs_value(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace c0t
