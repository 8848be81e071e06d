#include "treemaps/substructure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace treemaps {

namespace {

int vec_sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void check_columns(int K, const std::set<int>& cols, const char* what) {
    for (int j : cols)
        if (j < 1 || j > K) throw std::invalid_argument(std::string(what) + ": column out of range");
}

void check_phi(int K, const std::set<int>& forbidden_tails, const std::map<int, int>& phi,
               const char* what) {
    for (const auto& [j, t] : phi) {
        if (j < 1 || j > K || t < 1 || t > K)
            throw std::invalid_argument(std::string(what) + ": arrow out of range");
        if (forbidden_tails.count(j))
            throw std::invalid_argument(std::string(what) + ": arrow-tail on a forbidden column");
    }
}

// Counts matchings between the two rows of a fixed-occupancy grid that pass
// the forest condition; marks and arrows are fixed by the caller.
BigInt count_matchings(const std::vector<int>& w1, const std::vector<int>& w2,
                       const std::set<int>& r1, const std::set<int>& r2,
                       const std::map<int, int>& phi) {
    const int K = static_cast<int>(w1.size());
    PairedArray base(2, K);
    std::vector<int> slots1, slots2;
    for (int j = 1; j <= K; ++j) {
        for (int t = 0; t < w1[static_cast<size_t>(j - 1)]; ++t) slots1.push_back(base.add_vertex(1, j));
        for (int t = 0; t < w2[static_cast<size_t>(j - 1)]; ++t) slots2.push_back(base.add_vertex(2, j));
        base.set_mark(1, j, r1.count(j) > 0);
        base.set_mark(2, j, r2.count(j) > 0);
    }
    if (slots1.size() != slots2.size())
        throw std::invalid_argument("count_matchings: row vertex totals differ");

    std::vector<int> perm(slots1.size());
    std::iota(perm.begin(), perm.end(), 0);
    BigInt count = 0;
    do {
        PairedArray arr = base;
        for (size_t t = 0; t < perm.size(); ++t)
            arr.set_pair(slots1[t], slots2[static_cast<size_t>(perm[t])]);
        if (check_forest_row(arr, 1, &phi) && check_forest_row(arr, 2)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

int GammaSub::s() const { return vec_sum(w1); }
int DeltaSub::s() const { return vec_sum(w); }
int LambdaSub::s(int R1) const { return vec_sum(x) + static_cast<int>(p.size()) - R1; }

BigInt enumerate_substructure(const GammaSub& g) {
    if (static_cast<int>(g.w1.size()) != g.K || static_cast<int>(g.w2.size()) != g.K)
        throw std::invalid_argument("GammaSub: occupancy size mismatch");
    if (vec_sum(g.w1) != vec_sum(g.w2))
        throw std::invalid_argument("GammaSub: row vertex totals differ");
    check_columns(g.K, g.r1, "GammaSub");
    check_columns(g.K, g.r2, "GammaSub");
    check_phi(g.K, g.r1, g.phi, "GammaSub");
    return count_matchings(g.w1, g.w2, g.r1, g.r2, g.phi);
}

BigInt enumerate_substructure(const DeltaSub& d, int R2) {
    if (static_cast<int>(d.w.size()) != d.K)
        throw std::invalid_argument("DeltaSub: occupancy size mismatch");
    if (R2 < 1 || R2 > d.K) throw std::invalid_argument("DeltaSub: R2 out of range");
    check_columns(d.K, d.r1, "DeltaSub");
    check_phi(d.K, d.r1, d.phi, "DeltaSub");
    BigInt total = 0;
    for_each_subset(d.K, R2, [&](const std::vector<int>& cols) {
        total += count_matchings(d.w, d.w, d.r1, std::set<int>(cols.begin(), cols.end()), d.phi);
    });
    return total;
}

BigInt enumerate_substructure(const LambdaSub& l, int R1, int R2) {
    if (static_cast<int>(l.x.size()) != l.K)
        throw std::invalid_argument("LambdaSub: occupancy size mismatch");
    if (l.p.empty() || R1 < 1 || R1 > static_cast<int>(l.p.size()))
        throw std::invalid_argument("LambdaSub: need |P| >= R1 >= 1");
    if (R2 < 1 || R2 > l.K) throw std::invalid_argument("LambdaSub: R2 out of range");
    check_columns(l.K, l.p, "LambdaSub");
    check_phi(l.K, l.p, l.phi, "LambdaSub");
    for (int j = 1; j <= l.K; ++j) {
        const bool in_scope = l.p.count(j) || l.phi.count(j);
        if (!in_scope && l.x[static_cast<size_t>(j - 1)] != 0)
            throw std::invalid_argument("LambdaSub: x must vanish outside dom(phi) and P");
    }
    for (const auto& [j, t] : l.phi)
        if (!l.p.count(t) && !l.phi.count(t))
            throw std::invalid_argument("LambdaSub: arrows must stay inside dom(phi) and P");

    const std::vector<int> pcols(l.p.begin(), l.p.end());
    BigInt total = 0;
    for_each_subset(static_cast<int>(pcols.size()), R1, [&](const std::vector<int>& pick) {
        std::set<int> r1;
        for (int ix : pick) r1.insert(pcols[static_cast<size_t>(ix - 1)]);
        std::vector<int> w = l.x;
        for (int j : l.p)
            if (!r1.count(j)) ++w[static_cast<size_t>(j - 1)];
        for_each_subset(l.K, R2, [&](const std::vector<int>& cols) {
            total += count_matchings(w, w, r1, std::set<int>(cols.begin(), cols.end()), l.phi);
        });
    });
    return total;
}

// --- arrow simplification ------------------------------------------------------

bool phi_has_cycle(const std::map<int, int>& phi) {
    for (const auto& [start, _] : phi) {
        int cur = start;
        int steps = 0;
        while (true) {
            auto it = phi.find(cur);
            if (it == phi.end()) break;
            cur = it->second;
            if (++steps > static_cast<int>(phi.size())) return true;
        }
    }
    return false;
}

namespace {

// Rule 1: a tail pointing at a row-1-marked column becomes a mark itself.
// Rule 2: a tail pointing at another tail points to that tail's target.
// Returns true when a step was applied to (r1, phi).
bool step_marks_and_arrows(std::set<int>* r1, std::map<int, int>& phi) {
    for (auto& [j, t] : phi) {
        if (r1 && r1->count(t)) {
            r1->insert(j);
            phi.erase(j);
            return true;
        }
        auto next = phi.find(t);
        if (next != phi.end() && t != j) {
            t = next->second;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<GammaSub> simplify_step(const GammaSub& g) {
    if (phi_has_cycle(g.phi)) return std::nullopt;
    GammaSub out = g;
    if (step_marks_and_arrows(&out.r1, out.phi)) return out;
    return std::nullopt;
}

std::optional<DeltaSub> simplify_step(const DeltaSub& d) {
    if (phi_has_cycle(d.phi)) return std::nullopt;
    DeltaSub out = d;
    if (step_marks_and_arrows(&out.r1, out.phi)) return out;
    return std::nullopt;
}

std::optional<LambdaSub> simplify_step(const LambdaSub& l) {
    if (phi_has_cycle(l.phi)) return std::nullopt;
    LambdaSub out = l;
    if (step_marks_and_arrows(nullptr, out.phi)) return out;
    return std::nullopt;
}

template <typename Sub>
static SimplifyOutcome<Sub> simplify_all(Sub s) {
    const bool cycle = phi_has_cycle(s.phi);
    SimplifyOutcome<Sub> out{std::move(s), cycle};
    if (out.has_cycle) return out;
    while (auto next = simplify_step(out.sub)) out.sub = std::move(*next);
    return out;
}

SimplifyOutcome<GammaSub> arrow_simplify(GammaSub g) { return simplify_all(std::move(g)); }
SimplifyOutcome<DeltaSub> arrow_simplify(DeltaSub d) { return simplify_all(std::move(d)); }
SimplifyOutcome<LambdaSub> arrow_simplify(LambdaSub l) { return simplify_all(std::move(l)); }

bool is_irreducible(const GammaSub& g) {
    return !phi_has_cycle(g.phi) && !simplify_step(g).has_value();
}
bool is_irreducible(const DeltaSub& d) {
    return !phi_has_cycle(d.phi) && !simplify_step(d).has_value();
}
bool is_irreducible(const LambdaSub& l) {
    return !phi_has_cycle(l.phi) && !simplify_step(l).has_value();
}

bool is_admissible(const DeltaSub& d) {
    if (!is_irreducible(d)) return false;
    for (const auto& [j, t] : d.phi)
        if (d.w[static_cast<size_t>(t - 1)] == 0) return false;
    return true;
}

// --- column types ------------------------------------------------------------------

long ColumnTypePartition::column_count(ColumnType t) const {
    auto it = columns.find(t);
    return it == columns.end() ? 0 : static_cast<long>(it->second.size());
}

long ColumnTypePartition::vertex_count(ColumnType t, int row, const GammaSub& g) const {
    const auto& w = row == 1 ? g.w1 : g.w2;
    long total = 0;
    auto it = columns.find(t);
    if (it == columns.end()) return 0;
    for (int j : it->second) total += w[static_cast<size_t>(j - 1)];
    return total;
}

ColumnTypePartition classify_columns(const GammaSub& g) {
    if (!is_irreducible(g))
        throw std::invalid_argument("classify_columns: substructure must be irreducible");
    ColumnTypePartition part;
    std::set<int> tails;
    for (const auto& [j, t] : g.phi) tails.insert(j);
    for (int j = 1; j <= g.K; ++j) {
        const bool m1 = g.r1.count(j) > 0;
        const bool m2 = g.r2.count(j) > 0;
        ColumnType t;
        auto arrow = g.phi.find(j);
        if (arrow != g.phi.end()) {
            const bool to_marked_2 = g.r2.count(arrow->second) > 0;
            // irreducibility guarantees the target is unmarked in row 1 and
            // carries no tail, so it is of type A or C
            if (!to_marked_2)
                t = m2 ? ColumnType::Atil : ColumnType::Abar;
            else
                t = m2 ? ColumnType::Ctil : ColumnType::Cbar;
        } else if (!m1 && !m2)
            t = ColumnType::A;
        else if (m1 && !m2)
            t = ColumnType::B;
        else if (!m1 && m2)
            t = ColumnType::C;
        else
            t = ColumnType::D;
        part.columns[t].push_back(j);
    }
    return part;
}

// --- closed forms ---------------------------------------------------------------------

BigRational t_gamma(const GammaSub& g, const ColumnTypePartition& part) {
    for (int j = 1; j <= g.K; ++j) {
        const bool full1 = g.w1[static_cast<size_t>(j - 1)] > 0 || g.r1.count(j) || g.phi.count(j);
        const bool full2 = g.w2[static_cast<size_t>(j - 1)] > 0 || g.r2.count(j);
        if (!full1 || !full2)
            throw std::domain_error("t_gamma: requires the full condition (no empty cell)");
    }
    const long s = g.s();
    const long A = part.column_count(ColumnType::A);
    if (s <= A) throw std::domain_error("t_gamma: requires s >= A + 1");

    const BigRational b2d2(part.vertex_count(ColumnType::B, 2, g) +
                           part.vertex_count(ColumnType::D, 2, g));
    const BigRational row1_meet_marked2(part.vertex_count(ColumnType::Atil, 1, g) +
                                        part.vertex_count(ColumnType::C, 1, g) +
                                        part.vertex_count(ColumnType::Ctil, 1, g) +
                                        part.vertex_count(ColumnType::D, 1, g));
    const BigRational fact_s1(factorial(s - 1));
    if (s == A + 1) return fact_s1 * b2d2 * row1_meet_marked2;

    const BigRational b1(part.vertex_count(ColumnType::B, 1, g));
    const BigRational c2_sum(part.vertex_count(ColumnType::C, 2, g) +
                             part.vertex_count(ColumnType::Cbar, 2, g) +
                             part.vertex_count(ColumnType::Ctil, 2, g));
    const BigRational cbar1(part.vertex_count(ColumnType::Cbar, 1, g));
    const BigRational sA(s - A);
    return fact_s1 * (b2d2 * row1_meet_marked2 / sA +
                      (b1 * c2_sum - cbar1 * b2d2) / (sA * (sA - 1)));
}

BigRational t_gamma(const GammaSub& g) { return t_gamma(g, classify_columns(g)); }

namespace {

// r = vertices in row 1 of the marked columns; M = columns holding a critical
// row-1 vertex (non-empty, unmarked, no arrow-tail).
std::pair<long, long> delta_r_and_M(const DeltaSub& d) {
    long r = 0, M = 0;
    for (int j = 1; j <= d.K; ++j) {
        const int wj = d.w[static_cast<size_t>(j - 1)];
        if (d.r1.count(j))
            r += wj;
        else if (wj > 0 && !d.phi.count(j))
            ++M;
    }
    return {r, M};
}

}  // namespace

BigInt t_delta(const DeltaSub& d, int R2) {
    const long s = d.s();
    if (d.r1.empty() || R2 < 1) throw std::domain_error("t_delta: requires R1, R2 >= 1");
    for (int wj : d.w)
        if (wj <= 0) throw std::domain_error("t_delta: requires w_j > 0 for every column");
    if (!is_irreducible(d)) throw std::domain_error("t_delta: substructure must be irreducible");
    const auto [r, M] = delta_r_and_M(d);
    BigRational total(0);
    for (long A = 0; A <= s - 1; ++A) {
        BigRational term(r);
        term /= BigRational(s - A);
        term *= BigRational(binomial_int(M, M - A));
        term *= BigRational(binomial_int(d.K - M - 1, R2 - M + A - 1));
        total += term;
    }
    total *= BigRational(factorial(s));
    return to_integer(total);
}

BigRational t_delta_admissible(const DeltaSub& d, int R2) {
    if (d.r1.empty() || R2 < 1)
        throw std::domain_error("t_delta_admissible: requires R1, R2 >= 1");
    if (!is_admissible(d))
        throw std::domain_error("t_delta_admissible: substructure must be admissible");
    const long s = d.s();
    const auto [r, M] = delta_r_and_M(d);
    BigRational total(0);
    for (long A = 0; A <= std::min<long>(s, d.K) - 1; ++A) {
        BigRational term(factorial(M));
        term *= BigRational(factorial(d.K - A - 1));
        term *= BigRational(factorial(s - A - 1));
        term *= reciprocal_factorial(M - A);
        term *= reciprocal_factorial(d.K - R2 - A);
        term *= reciprocal_factorial(R2 - 1);
        total += term;
    }
    return BigRational(r) * total;
}

BigRational t_lambda(const LambdaSub& l, int R1, int R2) {
    const long P = static_cast<long>(l.p.size());
    if (P < R1 || R1 < 1 || R2 < 1) throw std::domain_error("t_lambda: requires P >= R1 >= 1, R2 >= 1");
    const long s = l.s(R1);
    if (s < 1) throw std::domain_error("t_lambda: requires s >= 1");
    if (phi_has_cycle(l.phi)) throw std::domain_error("t_lambda: arrows contain a cycle");
    // the arrows must reach P (rooted forest)
    for (const auto& [start, _] : l.phi) {
        int cur = start;
        while (!l.p.count(cur)) {
            auto it = l.phi.find(cur);
            if (it == l.phi.end())
                throw std::domain_error("t_lambda: arrows do not form a forest rooted at P");
            cur = it->second;
        }
    }

    return lambda_count_formula(l.K, static_cast<int>(P), R1, R2, static_cast<int>(s));
}

BigRational lambda_count_formula(int K, int P, int R1, int R2, int s) {
    BigRational total(0);
    for (long A = 0; A <= std::min(s, K) - 1; ++A) {
        BigRational term(s - P + R1);
        term *= BigRational(factorial(K - A - 1));
        term *= BigRational(factorial(s - A - 1));
        term *= BigRational(factorial(P - 1));
        term *= reciprocal_factorial(P - R1 - A);
        term *= reciprocal_factorial(K - R2 - A);
        term *= reciprocal_factorial(R1 - 1);
        term *= reciprocal_factorial(R2 - 1);
        total += term;
    }
    return total;
}

}  // namespace treemaps
