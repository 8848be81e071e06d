#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treemaps/oracle.hpp"

#include <set>

using namespace treemaps;

namespace {

MapParameters one_row(int q) { return MapParameters({q}, MixedCounts(1)); }

}  // namespace

TEST_CASE("pairing counts") {
    CHECK(count_pairings(one_row(1)) == 1);
    CHECK(count_pairings(one_row(2)) == 3);
    CHECK(count_pairings(make_parameters({0, 0}, {{1, 2, 2}})) == 2);
    SUBCASE("single row totals follow the double factorial") {
        for (int q = 1; q <= 6; ++q) CHECK(count_pairings(one_row(q)) == double_factorial(2 * q - 1));
    }
}

TEST_CASE("emitted pairings satisfy the profile and stream is duplicate free") {
    const MapParameters params = make_parameters({1, 0, 1}, {{1, 2, 1}, {2, 3, 2}});
    std::set<std::string> seen;
    long count = 0;
    for_each_pairing(params, [&](const Pairing& mu) {
        ++count;
        CHECK(seen.insert(mu.key()).second);
        std::vector<int> loops(3, 0);
        MixedCounts mixed(3);
        mu.tally(loops, mixed);
        CHECK(loops == std::vector<int>{1, 0, 1});
        CHECK(mixed.at(1, 2) == 1);
        CHECK(mixed.at(2, 3) == 2);
        CHECK(mixed.at(1, 3) == 0);
        // fixed-point-free involution
        const auto perm = mu.as_permutation(params.row_sizes());
        for (int i = 1; i <= 3; ++i)
            for (int x = 1; x <= params.p(i); ++x) {
                const GroundElement e{i, x};
                CHECK(perm.apply(e) != e);
                CHECK(perm.apply(perm.apply(e)) == e);
            }
    });
    CHECK(count == static_cast<long>(seen.size()));
}

TEST_CASE("face distributions") {
    SUBCASE("q=1 single loop") {
        const auto d = face_distribution(one_row(1));
        CHECK(d.counts() == std::map<long, BigInt>{{2, 1}});
    }
    SUBCASE("q=2 matches 2x^3 + x") {
        const auto d = face_distribution(one_row(2));
        CHECK(d.counts() == std::map<long, BigInt>{{1, 1}, {3, 2}});
    }
    SUBCASE("3-row chain") {
        const auto d = face_distribution(make_parameters({0, 0, 0}, {{1, 2, 1}, {2, 3, 1}}));
        CHECK(d.counts() == std::map<long, BigInt>{{1, 2}});
    }
}

TEST_CASE("oracle series") {
    SUBCASE("q=1 gives x^2") {
        CHECK(oracle_series(one_row(1)).to_string() == "x^2");
    }
    SUBCASE("q=3 gives 10x^2 + 5x^4") {
        const auto p = oracle_series(one_row(3));
        CHECK(p.coeff(2) == 10);
        CHECK(p.coeff(4) == 5);
        CHECK(p.coeff(1) == 0);
        CHECK(p.coeff(3) == 0);
    }
    SUBCASE("single mixed pair gives x") {
        CHECK(oracle_series(make_parameters({0, 0}, {{1, 2, 1}})).to_string() == "x");
    }
    SUBCASE("value at 1 counts all pairings") {
        for (int q = 1; q <= 5; ++q)
            CHECK(oracle_series(one_row(q)).eval(1) == BigRational(count_pairings(one_row(q))));
    }
    SUBCASE("face parity matches d - n mod 2") {
        const auto params = make_parameters({1, 0}, {{1, 2, 2}});
        const int parity = (params.total_pairs() - params.n()) % 2;
        const auto d = face_distribution(params);
        for (const auto& [L, c] : d.counts()) CHECK(L % 2 == parity);
    }
}

TEST_CASE("paired function counts by direct colouring check") {
    SUBCASE("n=1 q=1 K=2") { CHECK(paired_function_count_direct(one_row(1), 2) == 4); }
    SUBCASE("n=1 q=2 K=1") { CHECK(paired_function_count_direct(one_row(2), 1) == 3); }
    SUBCASE("n=1 q=2 K=2 is 2*2^3 + 1*2") {
        CHECK(paired_function_count_direct(one_row(2), 2) == 18);
    }
    SUBCASE("identity with sum_L a_L K^L on mixed profiles") {
        const auto params = make_parameters({0, 1}, {{1, 2, 2}});
        const auto d = face_distribution(params);
        for (int K = 1; K <= 3; ++K) {
            BigInt expect = 0;
            for (const auto& [L, c] : d.counts()) {
                BigInt kp = 1;
                for (long t = 0; t < L; ++t) kp *= K;
                expect += c * kp;
            }
            CHECK(paired_function_count_direct(params, K) == expect);
        }
    }
    SUBCASE("guard rejects oversized colouring spaces") {
        CHECK_THROWS_AS(paired_function_count_direct(one_row(9), 3), std::length_error);
    }
}
