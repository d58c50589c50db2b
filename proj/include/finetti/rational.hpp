#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace finetti {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; 0 for k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// base^exponent with negative exponents mapped to the reciprocal.
// Requires base != 0 when exponent < 0.
Rational pow_rational(const Rational& base, std::int64_t exponent);

double to_double(const Rational& value);

}  // namespace finetti
