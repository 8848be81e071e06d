#ifndef TREEMAPS_POLYNOMIAL_HPP
#define TREEMAPS_POLYNOMIAL_HPP

// Univariate polynomials with exact rational coefficients.  Coefficients are
// kept in ascending degree with no trailing zeros, so equality is plain
// coefficient-wise comparison.

#include "treemaps/exact.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace treemaps {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(BigRational constant);
    explicit Polynomial(std::vector<BigRational> ascending_coeffs);

    static Polynomial x();
    static Polynomial constant(long v);
    static Polynomial constant(const BigInt& v);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    BigRational coeff(long k) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    BigRational eval(const BigRational& at) const;
    BigRational eval(long at) const;

    bool integer_coefficients() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
    friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

// base(base+1)...(base+m-1) as polynomials; m = 0 gives the constant 1.
Polynomial rising_factorial(const Polynomial& base, long m);

// Rising factorial of a number: a(a+1)...(a+m-1).
BigRational rising_factorial(const BigRational& a, long m);

// x(x-1)...(x-k+1)/k! — the binomial coefficient C(x, k) as a polynomial.
Polynomial binomial_poly(long k);

// Unique interpolating polynomial of degree < #points through the given
// (integer abscissa, rational ordinate) pairs.  Throws on duplicate abscissas
// or an empty list.
Polynomial interpolate(const std::vector<std::pair<long, BigRational>>& points);

// Coefficients c_k with P(x) = sum_k c_k * C(x, k), k = 0..deg(P).
std::vector<BigRational> binomial_basis(const Polynomial& p);

}  // namespace treemaps

#endif
