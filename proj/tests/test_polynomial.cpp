#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treemaps/polynomial.hpp"

#include <random>

using namespace treemaps;

namespace {

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4), coeff(-5, 5);
    std::vector<BigRational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("canonical form trims trailing zeros") {
    Polynomial p(std::vector<BigRational>{BigRational(1), BigRational(0), BigRational(0)});
    CHECK(p.degree() == 0);
    CHECK(p == Polynomial::constant(1));
    CHECK(Polynomial(std::vector<BigRational>{BigRational(0)}).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == Polynomial());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial a = random_poly(rng), b = random_poly(rng);
        for (long at : {-3L, 0L, 2L, 7L}) {
            CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
            CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
        }
    }
}

TEST_CASE("rising factorial") {
    const Polynomial x = Polynomial::x();
    SUBCASE("x^(3) = x^3 + 3x^2 + 2x") {
        const Polynomial r = rising_factorial(x, 3);
        CHECK(r.coeff(3) == 1);
        CHECK(r.coeff(2) == 3);
        CHECK(r.coeff(1) == 2);
        CHECK(r.coeff(0) == 0);
    }
    SUBCASE("constant base 1 for length 4 gives 4!") {
        CHECK(rising_factorial(Polynomial::constant(1), 4) == Polynomial::constant(24));
    }
    SUBCASE("zero factor at matching evaluation point") {
        const Polynomial r = rising_factorial(x - Polynomial::constant(2), 2);
        CHECK(r.eval(2) == 0);
    }
    SUBCASE("length 0 gives 1") { CHECK(rising_factorial(x, 0) == Polynomial::constant(1)); }
    SUBCASE("matches pointwise products at random integers") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const Polynomial p = random_poly(rng);
            for (long m : {0L, 1L, 3L}) {
                const Polynomial r = rising_factorial(p, m);
                for (long at : {-2L, 1L, 5L}) {
                    BigRational expect(1);
                    for (long t = 0; t < m; ++t) expect *= p.eval(at) + t;
                    CHECK(r.eval(at) == expect);
                }
            }
        }
    }
}

TEST_CASE("binomial polynomial") {
    CHECK(binomial_poly(0) == Polynomial::constant(1));
    const Polynomial c2 = binomial_poly(2);
    CHECK(c2.eval(4) == 6);
    CHECK(c2.eval(1) == 0);
    CHECK(c2.eval(-1) == 1);  // C(-1,2) = 1 by the polynomial extension
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= 8; ++k)
            CHECK(binomial_poly(k).eval(n) == BigRational(binomial_int(n, k)));
}

TEST_CASE("interpolation") {
    SUBCASE("squares give x^2") {
        const Polynomial p = interpolate({{1, BigRational(1)}, {2, BigRational(4)}, {3, BigRational(9)}});
        CHECK(p == Polynomial::x() * Polynomial::x());
    }
    SUBCASE("single point gives a constant") {
        CHECK(interpolate({{5, BigRational(7)}}) == Polynomial::constant(7));
    }
    SUBCASE("degree collapse") {
        const Polynomial p = interpolate(
            {{1, BigRational(1)}, {2, BigRational(2)}, {3, BigRational(3)}, {4, BigRational(4)}});
        CHECK(p == Polynomial::x());
    }
    SUBCASE("duplicate abscissas rejected") {
        CHECK_THROWS_AS(interpolate({{1, BigRational(1)}, {1, BigRational(2)}}), std::domain_error);
    }
    SUBCASE("left inverse of evaluation") {
        std::mt19937 rng(4242);
        for (int trial = 0; trial < 100; ++trial) {
            const Polynomial p = random_poly(rng);
            std::vector<std::pair<long, BigRational>> pts;
            for (long at = 0; at <= p.degree(); ++at) pts.emplace_back(at, p.eval(at));
            if (pts.empty()) pts.emplace_back(0, p.eval(0));
            CHECK(interpolate(pts) == p);
        }
    }
}

TEST_CASE("binomial basis conversion") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = random_poly(rng);
        const auto basis = binomial_basis(p);
        Polynomial back;
        for (size_t k = 0; k < basis.size(); ++k)
            back += binomial_poly(static_cast<long>(k)) * basis[k];
        CHECK(back == p);
    }
}

TEST_CASE("printing") {
    CHECK(Polynomial().to_string() == "0");
    Polynomial p(std::vector<BigRational>{BigRational(0), BigRational(1), BigRational(0), BigRational(2)});
    CHECK(p.to_string() == "x + 2*x^3");
}
