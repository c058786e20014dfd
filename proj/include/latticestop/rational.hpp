#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace latticestop {

// Exact arithmetic for the small-instance oracle and the bound polynomials.
// Denominators grow past 64 bits (binomials, factorials of up to 24), so
// arbitrary precision is required.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "7/3" for non-integers, "7" otherwise.
std::string rational_to_string(const Rational& q);

// Inverse of rational_to_string; accepts an optional sign and "a/b".
// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

double rational_to_double(const Rational& q);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

}  // namespace latticestop
