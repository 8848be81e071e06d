#include "treemaps/exact.hpp"

namespace treemaps {

BigInt factorial(long m) {
    if (m < 0) throw std::domain_error("factorial: negative argument " + std::to_string(m));
    BigInt r = 1;
    for (long j = 2; j <= m; ++j) r *= j;
    return r;
}

BigInt double_factorial(long m) {
    if (m < -1) throw std::domain_error("double_factorial: argument below -1");
    BigInt r = 1;
    for (long j = m; j >= 2; j -= 2) r *= j;
    return r;
}

BigRational reciprocal_factorial(long m) {
    if (m < 0) return BigRational(0);
    return BigRational(BigInt(1), factorial(m));
}

BigInt binomial_int(long n, long k) {
    if (n < 0) throw std::domain_error("binomial_int: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;  // exact at every step: r is C(n-k+j, j)
    }
    return r;
}

bool is_integer(const BigRational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

BigInt to_integer(const BigRational& r) {
    if (!is_integer(r)) throw std::domain_error("to_integer: value is not integral");
    return boost::multiprecision::numerator(r);
}

std::string to_decimal_string(const BigInt& v) { return v.str(); }

BigInt bigint_from_string(const std::string& s) { return BigInt(s); }

}  // namespace treemaps
