#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ecslab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q" (q > 0 after normalization). Throws ParseError on junk.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

// base^e for any integer e; e < 0 requires base != 0.
Rational pow_int(const Rational& base, long long e);

// Exact k-th root of a nonnegative rational, if the root is rational.
std::optional<Rational> exact_root(const Rational& x, unsigned k);

// floor(x^(1/k)) for x >= 0, k >= 1.
BigInt nth_root_floor(const BigInt& x, unsigned k);

}  // namespace ecslab
