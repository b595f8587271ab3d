#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperlab/errors.hpp"

namespace hyperlab {

// Exact scalars. cpp_rational keeps values gcd-reduced with positive
// denominator, which is exactly the invariant the rest of the library
// assumes (componentwise equality needs no canonicalization step).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

bool is_integer(const Rational& q);
bool is_positive_integer(const Rational& q);

// Checked narrowing; DomainError when q is not an integer fitting in long.
long to_long(const Rational& q);

// Rising factorial (x)_n, extended to negative n as 1/((x-1)(x-2)...(x+n)).
// PoleError when a factor in the negative-n reciprocal vanishes.
Rational pochhammer(const Rational& x, long n);

// Sum_{t=1}^{m} 1/t^p; harmonic(0, p) = 0.
Rational harmonic(unsigned long m, unsigned p);

Integer factorial(unsigned long n);

// binomial(n, k) = 0 for k < 0 or k > n (empty-sum convention).
Integer binomial(unsigned long n, long k);

// Gamma(a)/Gamma(b) as an exact rational; requires a - b integral.
// PoleError when the ratio is infinite, RestrictionError when a - b is
// not an integer. Returns 0 when only the denominator gamma has a pole.
Rational gamma_ratio(const Rational& a, const Rational& b);

Rational pow_rational(const Rational& base, long e);

// "n" or "n/d", reduced.
std::string to_string(const Rational& q);

// Always "n/d", the records-file form.
std::string to_fraction_string(const Rational& q);

// Accepts "n" and "n/d"; FormatError otherwise.
Rational parse_rational(const std::string& text);

// Scientific decimal rendering of an exact rational, e.g. "1.2732395447e0".
// When round_up is set the magnitude is rounded away from zero, so the
// printed value is an upper bound on |q| (used for printed error bounds).
std::string decimal_string(const Rational& q, int significant_digits, bool round_up = false);

}  // namespace hyperlab
