#ifndef TREEMAPS_EXACT_HPP
#define TREEMAPS_EXACT_HPP

// Exact integer and rational arithmetic for the counting formulas.
// Everything downstream assumes no overflow at any input size, so all
// counts and coefficients go through BigInt / BigRational.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace treemaps {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// m! for m >= 0; throws std::domain_error for negative m.
BigInt factorial(long m);

// m!! with the convention (-1)!! = 1; throws for m < -1.
BigInt double_factorial(long m);

// 1/m! for m >= 0 and exactly 0 for m < 0.  The zero convention is what
// makes the nested factorial sums silently drop out-of-range terms.
BigRational reciprocal_factorial(long m);

// Binomial coefficient with the usual extension: 0 when k < 0 or k > n.
// n must be non-negative.
BigInt binomial_int(long n, long k);

bool is_integer(const BigRational& r);

// Exact conversion; throws std::domain_error if r is not an integer.
BigInt to_integer(const BigRational& r);

std::string to_decimal_string(const BigInt& v);
BigInt bigint_from_string(const std::string& s);

}  // namespace treemaps

#endif
