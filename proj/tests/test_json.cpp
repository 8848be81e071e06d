#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treemaps/formula.hpp"
#include "treemaps/json_io.hpp"
#include "treemaps/oracle.hpp"

using namespace treemaps;

TEST_CASE("polynomial json round trip") {
    const Polynomial p = harer_zagier(4);
    const auto j = polynomial_to_json(p);
    CHECK(j.at("var") == "x");
    CHECK(polynomial_from_json(j) == p);
    SUBCASE("coefficients are strings") {
        for (const auto& [key, val] : j.at("coeffs").items()) CHECK(val.is_string());
    }
    SUBCASE("huge coefficients survive") {
        const Polynomial big = Polynomial::constant(factorial(40));
        CHECK(polynomial_from_json(polynomial_to_json(big)) == big);
    }
}

TEST_CASE("distribution round trip and csv") {
    const FaceDistribution d = face_distribution(MapParameters({3}, MixedCounts(1)));
    CHECK(distribution_from_json(distribution_to_json(d)) == d);
    const std::string csv = distribution_to_csv(d);
    CHECK(csv == "L,count\n2,10\n4,5\n");
}

TEST_CASE("series report round trip") {
    SeriesReport r;
    r.q = {1, 0};
    r.s_edges = {{1, 2, 2}};
    r.d = 3;
    r.degree_bound = 3;
    r.pairing_total = "12";
    r.series = main_series(make_parameters({1, 0}, {{1, 2, 2}}));
    CHECK(series_report_from_json(to_json(r)) == r);
}

TEST_CASE("oracle report round trip") {
    OracleReport r;
    r.q = {2};
    r.s_edges = {};
    r.distribution = {{1, "1"}, {3, "2"}};
    r.series = oracle_series(MapParameters({2}, MixedCounts(1)));
    r.paired_function_counts = {{1, "3"}, {2, "18"}};
    CHECK(oracle_report_from_json(to_json(r)) == r);
}

TEST_CASE("suite report round trip") {
    SuiteReport r{"hz", {{"q=1", true, "x^2", "x^2"}, {"q=2", false, "a", "b"}}};
    const auto j = to_json(r);
    CHECK(j.at("passed") == 1);
    CHECK(j.at("failed") == 1);
    CHECK(suite_report_from_json(j) == r);
}

TEST_CASE("substructure report round trip") {
    SubstructureReport r{"lambda", "7", "7", true};
    CHECK(substructure_report_from_json(to_json(r)) == r);
}
