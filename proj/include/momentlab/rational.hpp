#ifndef MOMENTLAB_RATIONAL_HPP
#define MOMENTLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace momentlab {

/// Exact rational number. GMP keeps arithmetic results canonical
/// (positive denominator, reduced); values built from a numerator and
/// denominator must go through make_rational.
///
/// Note: never bind a gmpxx arithmetic expression to `auto`, it is an
/// expression template holding references to temporaries.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n", "n/d", or a finite decimal such as "-0.125" (exactly).
/// Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace momentlab

#endif
