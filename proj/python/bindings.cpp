// Python bindings for the main counting operations.  Polynomials and counts
// come back as ordinary Python ints (built from decimal strings, so they
// stay exact at any size).

#include "treemaps/formula.hpp"
#include "treemaps/json_io.hpp"
#include "treemaps/oracle.hpp"
#include "treemaps/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace treemaps;

namespace {

py::int_ big(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict poly_dict(const Polynomial& p) {
    py::dict out;
    for (long L = 0; L <= p.degree(); ++L) {
        const BigRational c = p.coeff(L);
        if (c == 0) continue;
        out[py::int_(L)] = big(to_integer(c));
    }
    return out;
}

MixedCounts mixed_from(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    MixedCounts s(n);
    for (const auto& [i, k, v] : edges)
        if (v > 0) s.set(i, k, v);
    return s;
}

MapParameters params_from(const std::vector<int>& q,
                          const std::vector<std::tuple<int, int, int>>& edges) {
    return MapParameters(q, mixed_from(static_cast<int>(q.size()), edges));
}

}  // namespace

PYBIND11_MODULE(treemaps, m) {
    m.doc() = "Exact enumeration of tree-like combinatorial maps by genus";

    m.def(
        "main_series",
        [](const std::vector<int>& q, const std::vector<std::tuple<int, int, int>>& s) {
            return poly_dict(main_series(params_from(q, s)));
        },
        py::arg("q"), py::arg("s") = std::vector<std::tuple<int, int, int>>{},
        "Genus generating series from the closed formula; returns {faces: count}.\n"
        "s is a list of (row_i, row_k, pairs) with 1-based rows.");

    m.def(
        "oracle_series",
        [](const std::vector<int>& q, const std::vector<std::tuple<int, int, int>>& s) {
            return poly_dict(oracle_series(params_from(q, s)));
        },
        py::arg("q"), py::arg("s") = std::vector<std::tuple<int, int, int>>{},
        "The same series tallied by brute-force pairing enumeration.");

    m.def(
        "face_distribution",
        [](const std::vector<int>& q, const std::vector<std::tuple<int, int, int>>& s) {
            py::dict out;
            const FaceDistribution dist = face_distribution(params_from(q, s));
            for (const auto& [L, c] : dist.counts()) out[py::int_(L)] = big(c);
            return out;
        },
        py::arg("q"), py::arg("s") = std::vector<std::tuple<int, int, int>>{});

    m.def(
        "harer_zagier", [](int q) { return poly_dict(harer_zagier(q)); }, py::arg("q"),
        "One-vertex genus series.");

    m.def(
        "goulden_slofstra",
        [](int q1, int q2, int s) { return poly_dict(goulden_slofstra(q1, q2, s)); },
        py::arg("q1"), py::arg("q2"), py::arg("s"), "Two-vertex genus series.");

    m.def(
        "v_numeric",
        [](int K, const std::vector<int>& R, const std::vector<std::tuple<int, int, int>>& s) {
            return big(v_numeric(K, R, mixed_from(static_cast<int>(R.size()), s)));
        },
        py::arg("K"), py::arg("R"), py::arg("s"),
        "Number of proper vertical arrays with K columns.");

    m.def(
        "v_poly",
        [](const std::vector<int>& R, const std::vector<std::tuple<int, int, int>>& s) {
            return poly_dict(v_poly(R, mixed_from(static_cast<int>(R.size()), s)));
        },
        py::arg("R"), py::arg("s"),
        "The vertical-array count as a polynomial in the column count.");

    m.def(
        "brute_vertical_count",
        [](int K, const std::vector<int>& R, const std::vector<std::tuple<int, int, int>>& s) {
            return big(brute_vertical_count(K, R, mixed_from(static_cast<int>(R.size()), s)));
        },
        py::arg("K"), py::arg("R"), py::arg("s"),
        "Exhaustive enumeration of the same arrays (small inputs only).");

    m.def(
        "canonical_count",
        [](const std::vector<int>& q, const std::vector<std::tuple<int, int, int>>& s, int K) {
            return big(canonical_count(params_from(q, s), K));
        },
        py::arg("q"), py::arg("s"), py::arg("K"));

    m.def(
        "paired_function_count",
        [](const std::vector<int>& q, const std::vector<std::tuple<int, int, int>>& s, int K) {
            return big(paired_function_count_direct(params_from(q, s), K));
        },
        py::arg("q"), py::arg("s"), py::arg("K"),
        "Direct colouring count; equals sum_L a_L K^L.");

    m.def(
        "verify",
        [](const std::string& suite, int qmax, int dmax, int Kmax, int smax, int jobs) {
            VerifyOptions opt;
            opt.qmax = qmax;
            opt.dmax = dmax;
            opt.Kmax = Kmax;
            opt.smax = smax;
            opt.jobs = jobs;
            const SuiteReport rep = run_suite(suite, opt);
            py::list failures;
            for (const auto& c : rep.checks)
                if (!c.ok) failures.append(py::make_tuple(c.name, c.lhs, c.rhs));
            py::dict out;
            out["suite"] = rep.suite;
            out["passed"] = rep.passed();
            out["failed"] = rep.failed();
            out["failures"] = failures;
            return out;
        },
        py::arg("suite"), py::arg("qmax") = 5, py::arg("dmax") = 6, py::arg("Kmax") = 3,
        py::arg("smax") = 4, py::arg("jobs") = 1,
        "Run a named oracle-vs-formula verification suite.");
}
