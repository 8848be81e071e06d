#include "treemaps/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace treemaps {

BigInt FaceDistribution::total() const {
    BigInt t = 0;
    for (const auto& [L, c] : counts_) t += c;
    return t;
}

Polynomial FaceDistribution::series() const {
    long deg = 0;
    for (const auto& [L, c] : counts_) deg = std::max(deg, L);
    std::vector<BigRational> coeffs(static_cast<size_t>(deg) + 1, BigRational(0));
    for (const auto& [L, c] : counts_) coeffs[static_cast<size_t>(L)] = BigRational(c);
    return Polynomial(std::move(coeffs));
}

namespace {

struct PairingEnumerator {
    const MapParameters& params;
    const std::function<void(const Pairing&)>& visit;
    std::vector<int> row_of;            // flat index -> row (1-based)
    std::vector<GroundElement> elems;   // flat index -> element
    std::vector<int> partner;           // flat index -> flat index or -1
    std::vector<int> loop_budget;       // remaining q_i
    MixedCounts mixed_budget;           // remaining s_{i,k}
    std::vector<std::pair<GroundElement, GroundElement>> chosen;

    explicit PairingEnumerator(const MapParameters& mp,
                               const std::function<void(const Pairing&)>& v)
        : params(mp), visit(v), mixed_budget(mp.s_matrix()) {
        for (int i = 1; i <= mp.n(); ++i)
            for (int x = 1; x <= mp.p(i); ++x) {
                row_of.push_back(i);
                elems.push_back({i, x});
            }
        partner.assign(elems.size(), -1);
        for (int i = 1; i <= mp.n(); ++i) loop_budget.push_back(mp.q(i));
    }

    void run() { extend(0); }

    void extend(size_t from) {
        size_t u = from;
        while (u < elems.size() && partner[u] != -1) ++u;
        if (u == elems.size()) {
            visit(Pairing(chosen));
            return;
        }
        const int ru = row_of[u];
        for (size_t v = u + 1; v < elems.size(); ++v) {
            if (partner[v] != -1) continue;
            const int rv = row_of[v];
            int* budget = nullptr;
            if (ru == rv) {
                if (loop_budget[static_cast<size_t>(ru - 1)] == 0) continue;
                budget = &loop_budget[static_cast<size_t>(ru - 1)];
                --*budget;
            } else {
                const int b = mixed_budget.at(ru, rv);
                if (b == 0) continue;
                mixed_budget.set(ru, rv, b - 1);
            }
            partner[u] = static_cast<int>(v);
            partner[v] = static_cast<int>(u);
            chosen.emplace_back(elems[u], elems[v]);
            extend(u + 1);
            chosen.pop_back();
            partner[u] = partner[v] = -1;
            if (budget)
                ++*budget;
            else
                mixed_budget.set(ru, rv, mixed_budget.at(ru, rv) + 1);
        }
    }
};

}  // namespace

void for_each_pairing(const MapParameters& params,
                      const std::function<void(const Pairing&)>& visit) {
    PairingEnumerator en(params, visit);
    en.run();
}

BigInt count_pairings(const MapParameters& params) {
    BigInt c = 0;
    for_each_pairing(params, [&](const Pairing&) { ++c; });
    return c;
}

FaceDistribution face_distribution(const MapParameters& params) {
    FaceDistribution dist;
    const auto p = params.row_sizes();
    const auto gamma_inv = invert(canonical_cycle(p));
    for_each_pairing(params, [&](const Pairing& mu) {
        dist.add(cycle_count(compose(mu.as_permutation(p), gamma_inv)));
    });
    return dist;
}

Polynomial oracle_series(const MapParameters& params) { return face_distribution(params).series(); }

BigInt paired_function_count_direct(const MapParameters& params, int K, double max_colourings) {
    if (K < 1) throw std::invalid_argument("paired_function_count_direct: K must be >= 1");
    const auto p = params.row_sizes();
    long total = 0;
    for (int v : p) total += v;
    if (total * std::log(static_cast<double>(K)) > std::log(max_colourings))
        throw std::length_error(
            "paired_function_count_direct: colouring space too large; "
            "use the face-distribution identity sum_L a_L K^L instead");

    const auto gamma = canonical_cycle(p);
    // Flat order of the ground set, row-major.
    std::vector<GroundElement> elems;
    for (int i = 1; i <= params.n(); ++i)
        for (int x = 1; x <= params.p(i); ++x) elems.push_back({i, x});
    auto index_of = [&](const GroundElement& e) {
        long f = 0;
        for (int r = 1; r < e.row; ++r) f += p[static_cast<size_t>(r - 1)];
        return f + e.pos - 1;
    };

    BigInt count = 0;
    for_each_pairing(params, [&](const Pairing& mu) {
        const auto mu_perm = mu.as_permutation(p);
        std::vector<int> colour(static_cast<size_t>(total), 0);
        while (true) {
            bool ok = true;
            for (const auto& e : elems) {
                const long a = index_of(mu_perm.apply(e));
                const long b = index_of(gamma.apply(e));
                if (colour[static_cast<size_t>(a)] != colour[static_cast<size_t>(b)]) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++count;
            // odometer step
            long pos = 0;
            while (pos < total && colour[static_cast<size_t>(pos)] == K - 1) {
                colour[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == total) break;
            ++colour[static_cast<size_t>(pos)];
        }
    });
    return count;
}

}  // namespace treemaps
