#include "treemaps/json_io.hpp"

#include <sstream>

namespace treemaps {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::object();
    for (long L = 0; L <= p.degree(); ++L) {
        const BigRational c = p.coeff(L);
        if (c == 0) continue;
        coeffs[std::to_string(L)] = to_integer(c).str();
    }
    return json{{"var", "x"}, {"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& j) {
    std::vector<std::pair<long, BigRational>> entries;
    long deg = -1;
    for (const auto& [key, val] : j.at("coeffs").items()) {
        const long L = std::stol(key);
        deg = std::max(deg, L);
        entries.emplace_back(L, BigRational(bigint_from_string(val.get<std::string>())));
    }
    std::vector<BigRational> coeffs(static_cast<size_t>(deg + 1), BigRational(0));
    for (const auto& [L, c] : entries) coeffs[static_cast<size_t>(L)] = c;
    return Polynomial(std::move(coeffs));
}

json distribution_to_json(const FaceDistribution& d) {
    json out = json::object();
    for (const auto& [L, c] : d.counts()) out[std::to_string(L)] = c.str();
    return out;
}

FaceDistribution distribution_from_json(const json& j) {
    FaceDistribution d;
    for (const auto& [key, val] : j.items())
        d.set(std::stol(key), bigint_from_string(val.get<std::string>()));
    return d;
}

std::string distribution_to_csv(const FaceDistribution& d) {
    std::ostringstream os;
    os << "L,count\n";
    for (const auto& [L, c] : d.counts()) os << L << "," << c.str() << "\n";
    return os.str();
}

namespace {

json edges_to_json(const std::vector<std::tuple<int, int, int>>& edges) {
    json out = json::array();
    for (const auto& [i, k, v] : edges) out.push_back(json::array({i, k, v}));
    return out;
}

std::vector<std::tuple<int, int, int>> edges_from_json(const json& j) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
    return out;
}

}  // namespace

json to_json(const SeriesReport& r) {
    return json{{"command", "series"},
                {"q", r.q},
                {"s", edges_to_json(r.s_edges)},
                {"d", r.d},
                {"degree_bound", r.degree_bound},
                {"pairing_total", r.pairing_total},
                {"series", polynomial_to_json(r.series)}};
}

SeriesReport series_report_from_json(const json& j) {
    SeriesReport r;
    r.q = j.at("q").get<std::vector<int>>();
    r.s_edges = edges_from_json(j.at("s"));
    r.d = j.at("d").get<int>();
    r.degree_bound = j.at("degree_bound").get<long>();
    r.pairing_total = j.at("pairing_total").get<std::string>();
    r.series = polynomial_from_json(j.at("series"));
    return r;
}

json to_json(const OracleReport& r) {
    json dist = json::object();
    for (const auto& [L, c] : r.distribution) dist[std::to_string(L)] = c;
    json pf = json::object();
    for (const auto& [K, c] : r.paired_function_counts) pf[std::to_string(K)] = c;
    return json{{"command", "oracle"},     {"q", r.q},
                {"s", edges_to_json(r.s_edges)}, {"distribution", dist},
                {"series", polynomial_to_json(r.series)}, {"paired_functions", pf}};
}

OracleReport oracle_report_from_json(const json& j) {
    OracleReport r;
    r.q = j.at("q").get<std::vector<int>>();
    r.s_edges = edges_from_json(j.at("s"));
    for (const auto& [key, val] : j.at("distribution").items())
        r.distribution[std::stol(key)] = val.get<std::string>();
    r.series = polynomial_from_json(j.at("series"));
    for (const auto& [key, val] : j.at("paired_functions").items())
        r.paired_function_counts[std::stoi(key)] = val.get<std::string>();
    return r;
}

json to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    return json{{"command", "verify"},
                {"suite", r.suite},
                {"checks", checks},
                {"passed", r.passed()},
                {"failed", r.failed()}};
}

SuiteReport suite_report_from_json(const json& j) {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>(),
                            c.at("lhs").get<std::string>(), c.at("rhs").get<std::string>()});
    return r;
}

json to_json(const SubstructureReport& r) {
    return json{{"command", "substructure-count"},
                {"kind", r.kind},
                {"closed_form", r.closed_form},
                {"brute", r.brute},
                {"match", r.match}};
}

SubstructureReport substructure_report_from_json(const json& j) {
    SubstructureReport r;
    r.kind = j.at("kind").get<std::string>();
    r.closed_form = j.at("closed_form").get<std::string>();
    r.brute = j.at("brute").get<std::string>();
    r.match = j.at("match").get<bool>();
    return r;
}

}  // namespace treemaps
