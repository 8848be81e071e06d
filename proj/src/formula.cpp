#include "treemaps/formula.hpp"

#include <stdexcept>

namespace treemaps {

namespace {

struct TreeData {
    int n = 0;
    std::vector<std::pair<int, int>> edges;            // ordered: edges[j-1] incident to j
    std::vector<std::vector<int>> neighbours;          // 1-based
    std::vector<int> edge_index;                       // n*n lookup -> edge position or -1
    int index(int i, int k) const { return edge_index[static_cast<size_t>((i - 1) * n + (k - 1))]; }
};

TreeData analyse_tree(const MixedCounts& s) {
    const SupportGraph g = support_graph(s);
    if (!is_tree(g)) throw std::invalid_argument("support graph of s is not a tree");
    TreeData t;
    t.n = g.n;
    t.edges = edge_ordering(g);
    t.neighbours.assign(static_cast<size_t>(g.n) + 1, {});
    t.edge_index.assign(static_cast<size_t>(g.n) * g.n, -1);
    for (size_t e = 0; e < t.edges.size(); ++e) {
        auto [i, k] = t.edges[e];
        t.neighbours[static_cast<size_t>(i)].push_back(k);
        t.neighbours[static_cast<size_t>(k)].push_back(i);
        t.edge_index[static_cast<size_t>((i - 1) * g.n + (k - 1))] = static_cast<int>(e);
        t.edge_index[static_cast<size_t>((k - 1) * g.n + (i - 1))] = static_cast<int>(e);
    }
    return t;
}

// Odometer over A-tuples; bounds[e] is exclusive.
bool advance(std::vector<int>& A, const std::vector<int>& bounds) {
    for (size_t e = 0; e < A.size(); ++e) {
        if (A[e] + 1 < bounds[e]) {
            ++A[e];
            return true;
        }
        A[e] = 0;
    }
    return false;
}

}  // namespace

BigInt v_numeric(int K, const std::vector<int>& R, const MixedCounts& s) {
    if (K < 1) throw std::invalid_argument("v_numeric: K must be >= 1");
    const TreeData t = analyse_tree(s);
    if (static_cast<int>(R.size()) != t.n) throw std::invalid_argument("v_numeric: R size mismatch");
    for (int r : R)
        if (r < 1) throw std::invalid_argument("v_numeric: R must be >= 1");

    const size_t m = t.edges.size();
    std::vector<int> bounds(m), A(m, 0);
    for (size_t e = 0; e < m; ++e) {
        auto [i, k] = t.edges[e];
        bounds[e] = std::min(s.at(i, k), K);
    }

    BigRational total(0);
    bool more = true;
    while (more) {
        BigRational term(1);
        for (size_t e = 0; e < m; ++e) {
            auto [i, k] = t.edges[e];
            term *= BigRational(factorial(K - A[e] - 1));
            term *= reciprocal_factorial(K + s.at(i, k) - A[e] - 1);
        }
        for (int i = 1; i <= t.n && term != 0; ++i) {
            int sum_s = 0, sum_A = 0, sum_sA1 = 0;
            for (int k : t.neighbours[static_cast<size_t>(i)]) {
                const int a = A[static_cast<size_t>(t.index(i, k))];
                sum_s += s.at(i, k);
                sum_A += a;
                sum_sA1 += s.at(i, k) - a - 1;
            }
            const int Ri = R[static_cast<size_t>(i - 1)];
            term *= BigRational(factorial(K + sum_sA1));
            term *= BigRational(factorial(Ri - 1 + sum_s));
            term *= reciprocal_factorial(Ri - 1);
            term *= reciprocal_factorial(K - Ri - sum_A);  // 0 when R_i is too large
            term *= reciprocal_factorial(Ri + sum_s - static_cast<int>(t.neighbours[static_cast<size_t>(i)].size()));
        }
        total += term;
        more = advance(A, bounds);
        if (bounds.empty()) break;
    }
    return to_integer(total);
}

Polynomial v_poly(const std::vector<int>& R, const MixedCounts& s) {
    const TreeData t = analyse_tree(s);
    const int n = t.n;
    if (static_cast<int>(R.size()) != n) throw std::invalid_argument("v_poly: R size mismatch");
    for (int r : R)
        if (r < 1) throw std::invalid_argument("v_poly: R must be >= 1");

    if (n == 1) return binomial_poly(R[0]);

    BigRational prefactor(1);
    for (int i = 1; i <= n; ++i) {
        int sum_s = 0;
        const int deg = static_cast<int>(t.neighbours[static_cast<size_t>(i)].size());
        for (int k : t.neighbours[static_cast<size_t>(i)]) sum_s += s.at(i, k);
        const int Ri = R[static_cast<size_t>(i - 1)];
        prefactor *= BigRational(factorial(Ri - 1 + sum_s));
        prefactor *= reciprocal_factorial(Ri - 1);
        prefactor *= reciprocal_factorial(Ri + sum_s - deg);
    }

    const size_t m = t.edges.size();
    std::vector<int> bounds(m), A(m, 0);
    for (size_t e = 0; e < m; ++e) {
        auto [i, k] = t.edges[e];
        bounds[e] = s.at(i, k);
    }

    const Polynomial x = Polynomial::x();
    Polynomial total;
    bool more = true;
    while (more) {
        auto row_sums = [&](int i) {
            int sum_s = 0, sum_A = 0, sum_sA1 = 0;
            for (int k : t.neighbours[static_cast<size_t>(i)]) {
                const int a = A[static_cast<size_t>(t.index(i, k))];
                sum_s += s.at(i, k);
                sum_A += a;
                sum_sA1 += s.at(i, k) - a - 1;
            }
            return std::tuple{sum_s, sum_A, sum_sA1};
        };

        auto [sn, An, snA1] = row_sums(n);
        const int Rn = R[static_cast<size_t>(n - 1)];
        const int deg_n = static_cast<int>(t.neighbours[static_cast<size_t>(n)].size());
        Polynomial term = rising_factorial(x - Polynomial::constant(Rn + An - 1),
                                           sn - deg_n + Rn);
        for (int j = 1; j <= n - 1; ++j) {
            auto [sj, Aj, sjA1] = row_sums(j);
            const int Rj = R[static_cast<size_t>(j - 1)];
            const int Aej = A[static_cast<size_t>(j - 1)];  // e_j is incident to vertex j
            const auto [eu, ev] = t.edges[static_cast<size_t>(j - 1)];
            const int sej = s.at(eu, ev);
            const int exp1 = Rj + Aj - Aej - 1;
            const int exp2 = sjA1 - sej + Aej + 1;
            if (exp1 < 0 || exp2 < 0)
                throw std::logic_error("v_poly: negative rising-factorial length");
            term *= rising_factorial(x - Polynomial::constant(Rj + Aj - 1), exp1);
            term *= rising_factorial(x + Polynomial::constant(sej - Aej), exp2);
        }
        total += term;
        more = advance(A, bounds);
        if (bounds.empty()) break;
    }
    return total * prefactor;
}

namespace {

// sum over t <= q of prod_i (2q_i+s_i)! / (2^{t_i} t_i! (s_i+q_i-t_i)!) * v(R = q-t+1)
template <typename Value, typename VFun>
Value loop_removal_sum(const MapParameters& params, const VFun& v_of_R) {
    const int n = params.n();
    std::vector<int> t(static_cast<size_t>(n), 0);
    Value total{};
    while (true) {
        BigRational coeff(1);
        std::vector<int> R(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            const int qi = params.q(i);
            const int si = params.s_row(i);
            const int ti = t[static_cast<size_t>(i - 1)];
            coeff *= BigRational(factorial(2 * qi + si));
            coeff /= BigRational(BigInt(1) << ti);
            coeff *= reciprocal_factorial(ti);
            coeff *= reciprocal_factorial(si + qi - ti);
            R[static_cast<size_t>(i - 1)] = qi - ti + 1;
        }
        total += v_of_R(R) * coeff;
        int pos = 0;
        while (pos < n && t[static_cast<size_t>(pos)] == params.q(pos + 1)) {
            t[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
        ++t[static_cast<size_t>(pos)];
    }
    return total;
}

}  // namespace

BigInt canonical_count(const MapParameters& params, int K) {
    const BigRational total = loop_removal_sum<BigRational>(
        params, [&](const std::vector<int>& R) { return BigRational(v_numeric(K, R, params.s_matrix())); });
    return to_integer(total);
}

Polynomial main_series(const MapParameters& params) {
    for (int i = 1; i <= params.n(); ++i)
        if (params.p(i) < 1)
            throw std::invalid_argument("main_series: every row degree p_i must be positive");
    const Polynomial series = loop_removal_sum<Polynomial>(
        params, [&](const std::vector<int>& R) { return v_poly(R, params.s_matrix()); });
    if (!series.integer_coefficients())
        throw std::logic_error("main_series: non-integral coefficient");
    for (long L = 0; L <= series.degree(); ++L)
        if (series.coeff(L) < 0) throw std::logic_error("main_series: negative coefficient");
    return series;
}

Polynomial harer_zagier(int q) {
    if (q < 1) throw std::invalid_argument("harer_zagier: q must be >= 1");
    const BigInt df = double_factorial(2 * q - 1);
    Polynomial total;
    for (long k = 1; k <= q + 1; ++k) {
        BigRational coeff(df);
        coeff *= BigRational(BigInt(1) << (k - 1));
        coeff *= BigRational(binomial_int(q, k - 1));
        total += binomial_poly(k) * coeff;
    }
    return total;
}

Polynomial goulden_slofstra(int q1, int q2, int s) {
    if (q1 < 0 || q2 < 0) throw std::invalid_argument("goulden_slofstra: q must be non-negative");
    if (s < 1)
        throw std::invalid_argument("goulden_slofstra: s must be >= 1 (tree-shaped two-row support)");
    const int p1 = 2 * q1 + s, p2 = 2 * q2 + s, d = q1 + q2 + s;
    const BigRational scale(factorial(p1) * factorial(p2));
    Polynomial total;
    for (long k = 1; k <= d + 1; ++k) {
        BigRational inner(0);
        for (int i = 0; i <= p1 / 2; ++i)
            for (int j = 0; j <= p2 / 2; ++j) {
                BigRational c(1);
                c /= BigRational(BigInt(1) << (i + j));
                c *= reciprocal_factorial(i);
                c *= reciprocal_factorial(j);
                c *= reciprocal_factorial(d - i - j);
                c *= BigRational(binomial_int(d - i - j, k - 1));
                const BigInt delta = binomial_int(k - 1, q1 - i) * binomial_int(k - 1, q2 - j) -
                                     binomial_int(k - 1, q1 + s - i) * binomial_int(k - 1, q2 + s - j);
                c *= BigRational(delta);
                inner += c;
            }
        total += binomial_poly(k) * (inner * scale);
    }
    return total;
}

bool hz_reduction_check(int q) {
    MapParameters params({q}, MixedCounts(1));
    return main_series(params) == harer_zagier(q);
}

long series_degree_bound(const MapParameters& params) {
    return params.total_pairs() - params.n() + 2;
}

}  // namespace treemaps
