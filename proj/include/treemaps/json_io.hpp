#ifndef TREEMAPS_JSON_IO_HPP
#define TREEMAPS_JSON_IO_HPP

// Machine-readable report formats.  Polynomial coefficients and counts are
// serialized as decimal strings, never as JSON numbers, so values beyond
// 64 bits survive a round trip.

#include "treemaps/oracle.hpp"
#include "treemaps/polynomial.hpp"
#include "treemaps/verify.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace treemaps {

// {"var":"x","coeffs":{"<L>":"<decimal>"}} with zero terms omitted.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json distribution_to_json(const FaceDistribution& d);
FaceDistribution distribution_from_json(const nlohmann::json& j);

// header "L,count" then ascending rows
std::string distribution_to_csv(const FaceDistribution& d);

struct SeriesReport {
    std::vector<int> q;
    std::vector<std::tuple<int, int, int>> s_edges;  // (i, k, count)
    int d = 0;
    long degree_bound = 0;
    std::string pairing_total;
    Polynomial series;
    bool operator==(const SeriesReport&) const = default;
};

struct OracleReport {
    std::vector<int> q;
    std::vector<std::tuple<int, int, int>> s_edges;
    std::map<long, std::string> distribution;
    Polynomial series;
    std::map<int, std::string> paired_function_counts;  // K -> count, optional
    bool operator==(const OracleReport&) const = default;
};

struct SubstructureReport {
    std::string kind;  // gamma | delta | lambda
    std::string closed_form;
    std::string brute;  // empty when the brute run was skipped
    bool match = false;
    bool operator==(const SubstructureReport&) const = default;
};

nlohmann::json to_json(const SeriesReport& r);
SeriesReport series_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OracleReport& r);
OracleReport oracle_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SuiteReport& r);
SuiteReport suite_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SubstructureReport& r);
SubstructureReport substructure_report_from_json(const nlohmann::json& j);

}  // namespace treemaps

#endif
