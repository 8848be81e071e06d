#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treemaps/exact.hpp"

using namespace treemaps;

TEST_CASE("factorial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(30).str() == "265252859812191058636308480000000");
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("double factorial with the (-1)!! = 1 convention") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(9) == 945);
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

TEST_CASE("reciprocal factorial vanishes on negatives") {
    CHECK(reciprocal_factorial(3) == BigRational(1, 6));
    CHECK(reciprocal_factorial(0) == 1);
    CHECK(reciprocal_factorial(-2) == 0);
    CHECK(reciprocal_factorial(-1) == 0);
}

TEST_CASE("reciprocal_factorial(m) * factorial(m) == 1 for m >= 0") {
    for (long m = 0; m <= 20; ++m)
        CHECK(reciprocal_factorial(m) * BigRational(factorial(m)) == 1);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial_int(4, 2) == 6);
    CHECK(binomial_int(3, 5) == 0);
    CHECK(binomial_int(3, -1) == 0);
    CHECK(binomial_int(0, 0) == 1);
    CHECK(binomial_int(60, 30).str() == "118264581564861424");
}

TEST_CASE("rational integrality") {
    CHECK(is_integer(BigRational(6, 3)));
    CHECK(!is_integer(BigRational(1, 3)));
    CHECK(to_integer(BigRational(6, 3)) == 2);
    CHECK_THROWS_AS(to_integer(BigRational(1, 3)), std::domain_error);
}

TEST_CASE("decimal string round trip") {
    const BigInt v = factorial(25);
    CHECK(bigint_from_string(to_decimal_string(v)) == v);
    CHECK(bigint_from_string("-12345678901234567890123456789") ==
          -bigint_from_string("12345678901234567890123456789"));
}
