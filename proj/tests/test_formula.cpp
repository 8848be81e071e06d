#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treemaps/arrays.hpp"
#include "treemaps/formula.hpp"
#include "treemaps/oracle.hpp"

using namespace treemaps;

namespace {

MapParameters one_row(int q) { return MapParameters({q}, MixedCounts(1)); }

// Star with centre 3 (s12 = 0): the vertical-array count written out as the
// explicit two-index sum, kept separate from the production code path.
BigRational v3_star_reference(int K, const std::vector<int>& R, int s13, int s23) {
    BigRational total(0);
    for (int A13 = 0; A13 < std::min(s13, K); ++A13)
        for (int A23 = 0; A23 < std::min(s23, K); ++A23) {
            BigRational term(factorial(K - A13 - 1));
            term *= BigRational(factorial(K - A23 - 1));
            term *= reciprocal_factorial(R[0] - 1);
            term *= reciprocal_factorial(R[1] - 1);
            term *= reciprocal_factorial(R[2] - 1);
            term *= reciprocal_factorial(K - R[0] - A13);
            term *= BigRational(factorial(K + s13 + s23 - A13 - A23 - 2));
            term *= BigRational(factorial(R[2] + s13 + s23 - 1));
            term *= reciprocal_factorial(K - R[1] - A23);
            term *= reciprocal_factorial(K - R[2] - A13 - A23);
            term *= reciprocal_factorial(R[2] + s13 + s23 - 2);
            total += term;
        }
    return total;
}

}  // namespace

TEST_CASE("vertical array closed form") {
    SUBCASE("one row is a plain binomial") {
        for (int K = 1; K <= 5; ++K)
            for (int R = 1; R <= 5; ++R)
                CHECK(v_numeric(K, {R}, MixedCounts(1)) == binomial_int(K, R));
    }
    SUBCASE("two rows, single shared edge") {
        MixedCounts s(2);
        s.set(1, 2, 1);
        for (int K = 1; K <= 6; ++K) CHECK(v_numeric(K, {1, 1}, s) == K);
    }
    SUBCASE("out-of-range marks give zero") {
        MixedCounts s(2);
        s.set(1, 2, 1);
        CHECK(v_numeric(2, {3, 1}, s) == 0);
        CHECK(v_numeric(2, {1, 4}, s) == 0);
    }
    SUBCASE("star with empty 1-2 edge matches the two-sum expression") {
        for (int s13 = 1; s13 <= 2; ++s13)
            for (int s23 = 1; s23 <= 2; ++s23) {
                MixedCounts s(3);
                s.set(1, 3, s13);
                s.set(2, 3, s23);
                for (int K = 1; K <= 4; ++K)
                    for (int R1 = 1; R1 <= K; ++R1)
                        for (int R2 = 1; R2 <= K; ++R2)
                            for (int R3 = 1; R3 <= K; ++R3) {
                                const std::vector<int> R{R1, R2, R3};
                                CHECK(BigRational(v_numeric(K, R, s)) ==
                                      v3_star_reference(K, R, s13, s23));
                            }
            }
    }
    SUBCASE("non-tree profiles rejected") {
        MixedCounts s(3);
        s.set(1, 2, 1);
        s.set(1, 3, 1);
        s.set(2, 3, 1);
        CHECK_THROWS_AS(v_numeric(2, {1, 1, 1}, s), std::invalid_argument);
        CHECK_THROWS_AS(v_poly({1, 1, 1}, s), std::invalid_argument);
    }
}

TEST_CASE("vertical array polynomial form") {
    SUBCASE("two rows gives the identity polynomial") {
        MixedCounts s(2);
        s.set(1, 2, 1);
        CHECK(v_poly({1, 1}, s) == Polynomial::x());
    }
    SUBCASE("3-row unit path gives 2x") {
        MixedCounts s(3);
        s.set(1, 2, 1);
        s.set(2, 3, 1);
        CHECK(v_poly({1, 1, 1}, s) == Polynomial::x() * BigRational(2));
    }
    SUBCASE("evaluations agree with the numeric form across a grid") {
        MixedCounts s(3);
        s.set(1, 2, 2);
        s.set(2, 3, 1);
        for (const std::vector<int>& R : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1, 3},
                                          std::vector<int>{1, 3, 2}}) {
            const Polynomial p = v_poly(R, s);
            for (int K = 1; K <= 10; ++K)
                CHECK(p.eval(K) == BigRational(v_numeric(K, R, s)));
        }
    }
    SUBCASE("interpolating the numeric values recovers the polynomial") {
        MixedCounts s(2);
        s.set(1, 2, 2);
        for (int R1 = 1; R1 <= 3; ++R1)
            for (int R2 = 1; R2 <= 3; ++R2) {
                const Polynomial p = v_poly({R1, R2}, s);
                std::vector<std::pair<long, BigRational>> pts;
                for (long K = 1; K <= p.degree() + 1; ++K)
                    pts.emplace_back(K, BigRational(v_numeric(static_cast<int>(K), {R1, R2}, s)));
                CHECK(interpolate(pts) == p);
            }
    }
}

TEST_CASE("canonical counts") {
    SUBCASE("no loops reduces to the all-ones vertical count") {
        MixedCounts s(2);
        s.set(1, 2, 2);
        const MapParameters params({0, 0}, s);
        for (int K = 1; K <= 4; ++K)
            CHECK(canonical_count(params, K) == v_numeric(K, {1, 1}, s));
    }
    SUBCASE("one row with two loops at K = 2") {
        CHECK(canonical_count(one_row(2), 2) == 18);
    }
    SUBCASE("agrees with exhaustive canonical array enumeration") {
        for (int K = 1; K <= 3; ++K) {
            CHECK(canonical_count(one_row(1), K) == enumerate_canonical_arrays(one_row(1), K));
            const auto two = make_parameters({1, 0}, {{1, 2, 1}});
            CHECK(canonical_count(two, K) == enumerate_canonical_arrays(two, K));
        }
    }
}

TEST_CASE("main series") {
    SUBCASE("one loop gives x^2") {
        CHECK(main_series(one_row(1)) == Polynomial::x() * Polynomial::x());
    }
    SUBCASE("single edge gives x") {
        CHECK(main_series(make_parameters({0, 0}, {{1, 2, 1}})) == Polynomial::x());
    }
    SUBCASE("3-row unit path gives 2x") {
        CHECK(main_series(make_parameters({0, 0, 0}, {{1, 2, 1}, {2, 3, 1}})) ==
              Polynomial::x() * BigRational(2));
    }
    SUBCASE("coefficients count pairings by face number") {
        const auto params = make_parameters({1, 1}, {{1, 2, 2}});
        const Polynomial series = main_series(params);
        CHECK(series == oracle_series(params));
        CHECK(series.eval(1) == BigRational(count_pairings(params)));
        CHECK(series.degree() <= series_degree_bound(params));
        const int parity = (params.total_pairs() - params.n()) % 2;
        for (long L = 0; L <= series.degree(); ++L)
            if (series.coeff(L) != 0) CHECK(L % 2 == parity);
    }
    SUBCASE("rows of degree zero rejected") {
        CHECK_THROWS_AS(main_series(MapParameters({0}, MixedCounts(1))), std::invalid_argument);
    }
    SUBCASE("matches the oracle on assorted instances up to d = 6") {
        const std::vector<MapParameters> instances = {
            MapParameters({6}, MixedCounts(1)),
            make_parameters({3, 0}, {{1, 2, 1}}),
            make_parameters({2, 2}, {{1, 2, 1}}),
            make_parameters({0, 0}, {{1, 2, 5}}),
            make_parameters({2, 0, 0}, {{1, 2, 1}, {1, 3, 2}}),
            make_parameters({0, 1, 0, 0}, {{1, 2, 1}, {2, 3, 1}, {2, 4, 2}}),
        };
        for (const auto& params : instances)
            CHECK(main_series(params) == oracle_series(params));
    }
    SUBCASE("non-tree support rejected") {
        CHECK_THROWS_AS(
            main_series(make_parameters({0, 0, 0}, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}})),
            std::invalid_argument);
        CHECK_THROWS_AS(main_series(make_parameters({1, 1}, {})), std::invalid_argument);
    }
}

TEST_CASE("one-vertex series") {
    CHECK(harer_zagier(1) == Polynomial::x() * Polynomial::x());
    SUBCASE("q=2 is 2x^3 + x") {
        const Polynomial p = harer_zagier(2);
        CHECK(p.coeff(3) == 2);
        CHECK(p.coeff(1) == 1);
        CHECK(p.degree() == 3);
    }
    SUBCASE("q=3 is 5x^4 + 10x^2") {
        const Polynomial p = harer_zagier(3);
        CHECK(p.coeff(4) == 5);
        CHECK(p.coeff(2) == 10);
    }
    SUBCASE("matches the oracle") {
        for (int q = 1; q <= 5; ++q) CHECK(harer_zagier(q) == oracle_series(one_row(q)));
    }
    SUBCASE("reduction of the general series") {
        for (int q = 1; q <= 4; ++q) CHECK(hz_reduction_check(q));
    }
    CHECK_THROWS_AS(harer_zagier(0), std::invalid_argument);
}

TEST_CASE("two-vertex series") {
    SUBCASE("no loops, single edge gives x") {
        CHECK(goulden_slofstra(0, 0, 1) == Polynomial::x());
    }
    SUBCASE("matches the general series") {
        for (int q1 = 0; q1 <= 2; ++q1)
            for (int q2 = 0; q2 <= 2; ++q2)
                for (int s = 1; s <= 3; ++s) {
                    if (q1 + q2 + s > 5) continue;
                    CHECK(goulden_slofstra(q1, q2, s) ==
                          main_series(make_parameters({q1, q2}, {{1, 2, s}})));
                }
    }
    SUBCASE("matches the oracle on two-edge maps") {
        CHECK(goulden_slofstra(0, 0, 2) == oracle_series(make_parameters({0, 0}, {{1, 2, 2}})));
    }
    SUBCASE("s = 0 is outside the two-row tree hypothesis") {
        CHECK_THROWS_AS(goulden_slofstra(1, 1, 0), std::invalid_argument);
    }
}
