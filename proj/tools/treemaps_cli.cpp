// Command-line front end: compute genus generating series and face
// distributions, count substructures, and run the oracle-vs-formula
// verification suites.
//
// Exit codes: 0 success, 1 verification mismatch, 2 precondition violation,
// 3 resource cap exceeded.

#include "treemaps/formula.hpp"
#include "treemaps/json_io.hpp"
#include "treemaps/oracle.hpp"
#include "treemaps/substructure.hpp"
#include "treemaps/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace treemaps;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitCap = 3;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::set<int> parse_int_set(const std::string& text) {
    const auto v = parse_int_list(text);
    return {v.begin(), v.end()};
}

std::map<int, int> parse_arrows(const std::string& text) {
    std::map<int, int> phi;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("arrow syntax is tail:head, e.g. 2:1");
        phi[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    return phi;
}

// s accepts either a named shape ("path:1,2" edges i-(i+1), "star:1,2" edges
// i-n) or the explicit upper triangle "s12,s13,...,s23,..." row by row.
MixedCounts parse_mixed(int n, const std::string& text) {
    MixedCounts s(n);
    if (text.empty()) return s;
    if (text.rfind("path:", 0) == 0 || text.rfind("star:", 0) == 0) {
        const bool star = text[0] == 's';
        const auto vals = parse_int_list(text.substr(5));
        if (static_cast<int>(vals.size()) != n - 1)
            throw std::invalid_argument("named shape needs n-1 edge values");
        for (int i = 1; i < n; ++i) {
            const int v = vals[static_cast<size_t>(i - 1)];
            if (v > 0) s.set(i, star ? n : i + 1, v);
        }
        return s;
    }
    const auto vals = parse_int_list(text);
    if (static_cast<int>(vals.size()) != n * (n - 1) / 2)
        throw std::invalid_argument("explicit s needs the n(n-1)/2 upper-triangle entries");
    size_t ix = 0;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            if (vals[ix] > 0) s.set(i, k, vals[ix]);
            ++ix;
        }
    return s;
}

std::vector<std::tuple<int, int, int>> edge_list(const MixedCounts& s) {
    std::vector<std::tuple<int, int, int>> out;
    for (int i = 1; i <= s.n(); ++i)
        for (int k = i + 1; k <= s.n(); ++k)
            if (s.at(i, k) > 0) out.emplace_back(i, k, s.at(i, k));
    return out;
}

int default_cap_d() {
    if (const char* env = std::getenv("TREEMAPS_CAP_D")) return std::atoi(env);
    return 8;
}

void print_series_text(const SeriesReport& rep, const std::string& basis) {
    std::cout << "A(x) = " << rep.series.to_string() << "\n";
    std::cout << "d = " << rep.d << ", degree bound = " << rep.degree_bound
              << ", pairings = " << rep.pairing_total << "\n";
    std::cout << "coefficients (ascending L):\n";
    for (long L = 0; L <= rep.series.degree(); ++L)
        if (rep.series.coeff(L) != 0)
            std::cout << "  " << L << ": " << to_integer(rep.series.coeff(L)).str() << "\n";
    if (basis == "binomial") {
        std::cout << "binomial basis (ascending k):\n";
        const auto b = binomial_basis(rep.series);
        for (size_t k = 0; k < b.size(); ++k)
            if (b[k] != 0) std::cout << "  C(x," << k << "): " << b[k].str() << "\n";
    }
}

int cmd_series(const std::vector<int>& q, const MixedCounts& s, const std::string& format,
               const std::string& basis, const std::string& verify_level, int cap_d) {
    MapParameters params(q, s);
    SeriesReport rep;
    rep.q = q;
    rep.s_edges = edge_list(s);
    rep.d = params.total_pairs();
    rep.degree_bound = series_degree_bound(params);
    rep.series = main_series(params);
    rep.pairing_total = to_integer(rep.series.eval(1)).str();

    if (verify_level == "oracle" || verify_level == "full") {
        if (params.total_pairs() > cap_d)
            throw std::length_error("oracle verification needs d <= cap (see --cap-d)");
        if (oracle_series(params) != rep.series) {
            std::cerr << "verification mismatch: series disagrees with pairing enumeration\n";
            return kExitMismatch;
        }
    }
    if (verify_level == "full") {
        // d + 2 nodes: at least one more than the face-count degree bound
        std::vector<std::pair<long, BigRational>> pts;
        for (long K = 1; K <= rep.d + 2; ++K)
            pts.emplace_back(K, BigRational(canonical_count(params, static_cast<int>(K))));
        if (interpolate(pts) != rep.series) {
            std::cerr << "verification mismatch: interpolated counts disagree with the series\n";
            return kExitMismatch;
        }
    }

    if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else if (format == "csv") {
        std::cout << "L,count\n";
        for (long L = 0; L <= rep.series.degree(); ++L)
            if (rep.series.coeff(L) != 0)
                std::cout << L << "," << to_integer(rep.series.coeff(L)).str() << "\n";
    } else
        print_series_text(rep, basis);
    return kExitOk;
}

int cmd_oracle(const std::vector<int>& q, const MixedCounts& s, const std::vector<int>& Ks,
               int cap_d, const std::string& format) {
    MapParameters params(q, s);
    if (params.total_pairs() > cap_d)
        throw std::length_error("pair count exceeds the enumeration cap (see --cap-d)");
    OracleReport rep;
    rep.q = q;
    rep.s_edges = edge_list(s);
    const FaceDistribution dist = face_distribution(params);
    for (const auto& [L, c] : dist.counts()) rep.distribution[L] = c.str();
    rep.series = dist.series();
    for (int K : Ks) rep.paired_function_counts[K] = paired_function_count_direct(params, K).str();

    if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else if (format == "csv")
        std::cout << distribution_to_csv(dist);
    else {
        std::cout << "faces L -> count:\n";
        for (const auto& [L, c] : rep.distribution) std::cout << "  " << L << ": " << c << "\n";
        std::cout << "series: " << rep.series.to_string() << "\n";
        for (const auto& [K, c] : rep.paired_function_counts)
            std::cout << "paired functions at K=" << K << ": " << c << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, const std::string& format) {
    const SuiteReport rep = run_suite(suite, opt);
    if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else {
        for (const auto& c : rep.checks) {
            std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << "\n";
            if (!c.ok) std::cout << "       lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
        }
        std::cout << rep.passed() << " passed, " << rep.failed() << " failed\n";
    }
    return rep.all_ok() ? kExitOk : kExitMismatch;
}

int cmd_substructure(const std::string& kind, const std::vector<int>& w1,
                     const std::vector<int>& w2, const std::vector<int>& x,
                     const std::set<int>& marks1, const std::set<int>& marks2,
                     const std::set<int>& pset, const std::map<int, int>& phi, int r1, int r2,
                     bool run_brute, const std::string& format) {
    SubstructureReport rep;
    rep.kind = kind;
    BigRational closed;
    BigInt brute;
    if (kind == "gamma") {
        GammaSub g{static_cast<int>(w1.size()), w1, w2, marks1, marks2, phi};
        closed = t_gamma(g);
        if (run_brute) brute = enumerate_substructure(g);
    } else if (kind == "delta") {
        DeltaSub d{static_cast<int>(w1.size()), w1, marks1, phi};
        const bool positive = std::all_of(w1.begin(), w1.end(), [](int v) { return v > 0; });
        closed = positive && is_irreducible(d) ? BigRational(t_delta(d, r2))
                                               : t_delta_admissible(d, r2);
        if (run_brute) brute = enumerate_substructure(d, r2);
    } else if (kind == "lambda") {
        LambdaSub l{static_cast<int>(x.size()), x, pset, phi};
        closed = t_lambda(l, r1, r2);
        if (run_brute) brute = enumerate_substructure(l, r1, r2);
    } else {
        throw std::invalid_argument("kind must be gamma, delta or lambda");
    }
    rep.closed_form = closed.str();
    if (run_brute) {
        rep.brute = brute.str();
        rep.match = closed == BigRational(brute);
    } else {
        rep.match = true;
    }
    if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else {
        std::cout << "closed form: " << rep.closed_form << "\n";
        if (run_brute)
            std::cout << "brute force: " << rep.brute << (rep.match ? " (match)" : " (MISMATCH)")
                      << "\n";
    }
    return rep.match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of tree-like combinatorial maps by genus"};
    app.require_subcommand(1);

    std::string format = "text", basis = "monomial", verify_level = "none";
    std::string q_text, s_text, k_text;
    int n = 0;
    int cap_d = default_cap_d();
    int jobs = 1;

    auto* series = app.add_subcommand("series", "Genus generating series from the closed formula");
    series->add_option("--n", n, "number of rows (defaults to the q length)");
    series->add_option("--q", q_text, "loop counts, e.g. 1,0,2")->required();
    series->add_option("--s", s_text, "mixed counts: upper triangle or path:/star: shape");
    series->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    series->add_option("--basis", basis)->check(CLI::IsMember({"monomial", "binomial"}));
    series->add_option("--verify", verify_level)->check(CLI::IsMember({"none", "oracle", "full"}));
    series->add_option("--cap-d", cap_d, "enumeration cap used by --verify oracle");

    auto* oracle = app.add_subcommand("oracle", "Brute-force face distribution over all pairings");
    oracle->add_option("--n", n);
    oracle->add_option("--q", q_text)->required();
    oracle->add_option("--s", s_text);
    oracle->add_option("--K", k_text, "also count paired functions at these K values");
    oracle->add_option("--cap-d", cap_d, "refuse enumerations beyond this pair count");
    oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    std::string suite;
    VerifyOptions opt;
    auto* verify = app.add_subcommand("verify", "Oracle-vs-formula verification suites");
    verify->add_option("suite", suite, "hz, gs, main, vertical, poly, gamma, delta, lambda, zeta, pf, figure, all")
        ->required();
    verify->add_option("--qmax", opt.qmax);
    verify->add_option("--dmax", opt.dmax);
    verify->add_option("--Kmax,--K", opt.Kmax);
    verify->add_option("--smax", opt.smax);
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string kind, w1_text, w2_text, x_text, marks1_text, marks2_text, p_text, phi_text;
    int r1 = 1, r2 = 1;
    bool no_brute = false;
    auto* sub = app.add_subcommand("substructure-count", "Count arrowed arrays in a substructure");
    sub->add_option("kind", kind, "gamma | delta | lambda")->required();
    sub->add_option("--w1", w1_text, "row-1 occupancy (gamma) or shared occupancy (delta)");
    sub->add_option("--w2", w2_text, "row-2 occupancy (gamma)");
    sub->add_option("--x", x_text, "non-critical occupancy (lambda)");
    sub->add_option("--marks1", marks1_text, "row-1 marked columns (gamma, delta)");
    sub->add_option("--marks2", marks2_text, "row-2 marked columns (gamma)");
    sub->add_option("--p", p_text, "root column set (lambda)");
    sub->add_option("--phi", phi_text, "arrows tail:head,...");
    sub->add_option("--r1", r1, "row-1 mark count (lambda)");
    sub->add_option("--r2", r2, "row-2 mark count (delta, lambda)");
    sub->add_flag("--no-brute", no_brute, "skip the exhaustive cross-check");
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (series->parsed() || oracle->parsed()) {
            const auto q = parse_int_list(q_text);
            if (n == 0) n = static_cast<int>(q.size());
            if (n != static_cast<int>(q.size()))
                throw std::invalid_argument("--n disagrees with the q vector length");
            const MixedCounts s = parse_mixed(n, s_text);
            if (series->parsed()) return cmd_series(q, s, format, basis, verify_level, cap_d);
            return cmd_oracle(q, s, parse_int_list(k_text), cap_d, format);
        }
        if (verify->parsed()) {
            opt.jobs = jobs;
            return cmd_verify(suite, opt, format);
        }
        if (sub->parsed())
            return cmd_substructure(kind, parse_int_list(w1_text), parse_int_list(w2_text),
                                    parse_int_list(x_text), parse_int_set(marks1_text),
                                    parse_int_set(marks2_text), parse_int_set(p_text),
                                    parse_arrows(phi_text), r1, r2, !no_brute, format);
    } catch (const std::length_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
