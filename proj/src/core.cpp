#include "treemaps/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace treemaps {

int MixedCounts::at(int i, int k) const {
    if (i < 1 || i > n_ || k < 1 || k > n_) throw std::out_of_range("MixedCounts::at");
    if (i == k) return 0;
    return v_[static_cast<size_t>(i - 1) * n_ + (k - 1)];
}

void MixedCounts::set(int i, int k, int val) {
    if (i < 1 || i > n_ || k < 1 || k > n_ || i == k)
        throw std::out_of_range("MixedCounts::set");
    if (val < 0) throw std::invalid_argument("MixedCounts::set: negative count");
    v_[static_cast<size_t>(i - 1) * n_ + (k - 1)] = val;
    v_[static_cast<size_t>(k - 1) * n_ + (i - 1)] = val;
}

int MixedCounts::row_total(int i) const {
    int t = 0;
    for (int k = 1; k <= n_; ++k)
        if (k != i) t += at(i, k);
    return t;
}

MapParameters::MapParameters(std::vector<int> q, MixedCounts s) : q_(std::move(q)), s_(std::move(s)) {
    if (q_.empty()) throw std::invalid_argument("MapParameters: n must be positive");
    if (s_.n() != static_cast<int>(q_.size()))
        throw std::invalid_argument("MapParameters: size mismatch between q and s");
    for (int qi : q_)
        if (qi < 0) throw std::invalid_argument("MapParameters: negative q entry");
}

int MapParameters::total_pairs() const {
    int d = 0;
    for (int i = 1; i <= n(); ++i) d += q(i);
    for (int i = 1; i <= n(); ++i)
        for (int k = i + 1; k <= n(); ++k) d += s(i, k);
    return d;
}

std::vector<int> MapParameters::row_sizes() const {
    std::vector<int> p;
    p.reserve(q_.size());
    for (int i = 1; i <= n(); ++i) p.push_back(this->p(i));
    return p;
}

MapParameters make_parameters(std::vector<int> q,
                              const std::vector<std::tuple<int, int, int>>& mixed_edges) {
    MixedCounts s(static_cast<int>(q.size()));
    for (const auto& [i, k, v] : mixed_edges) s.set(i, k, v);
    return MapParameters(std::move(q), std::move(s));
}

LabeledPermutation::LabeledPermutation(std::vector<int> p) : p_(std::move(p)) {
    offset_.resize(p_.size() + 1, 0);
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0) throw std::invalid_argument("LabeledPermutation: negative row size");
        offset_[i + 1] = offset_[i] + p_[i];
    }
    img_.resize(static_cast<size_t>(offset_.back()));
    std::iota(img_.begin(), img_.end(), 0L);
}

LabeledPermutation LabeledPermutation::identity(std::vector<int> row_sizes) {
    return LabeledPermutation(std::move(row_sizes));
}

long LabeledPermutation::ground_size() const { return offset_.back(); }

long LabeledPermutation::flat(const GroundElement& e) const {
    if (e.row < 1 || e.row > static_cast<int>(p_.size()) || e.pos < 1 ||
        e.pos > p_[static_cast<size_t>(e.row - 1)])
        throw std::out_of_range("LabeledPermutation: element outside ground set");
    return offset_[static_cast<size_t>(e.row - 1)] + e.pos - 1;
}

GroundElement LabeledPermutation::unflat(long ix) const {
    int row = 1;
    while (offset_[static_cast<size_t>(row)] <= ix) ++row;
    return {row, static_cast<int>(ix - offset_[static_cast<size_t>(row - 1)] + 1)};
}

GroundElement LabeledPermutation::apply(const GroundElement& e) const {
    return unflat(img_[static_cast<size_t>(flat(e))]);
}

void LabeledPermutation::set_image(const GroundElement& from, const GroundElement& to) {
    img_[static_cast<size_t>(flat(from))] = flat(to);
}

bool LabeledPermutation::is_bijection() const {
    std::vector<char> hit(img_.size(), 0);
    for (long v : img_) {
        if (v < 0 || v >= static_cast<long>(img_.size()) || hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = 1;
    }
    return true;
}

LabeledPermutation canonical_cycle(const std::vector<int>& row_sizes) {
    auto g = LabeledPermutation::identity(row_sizes);
    for (int i = 1; i <= static_cast<int>(row_sizes.size()); ++i) {
        const int p = row_sizes[static_cast<size_t>(i - 1)];
        for (int x = 1; x <= p; ++x) g.set_image({i, x}, {i, x % p + 1});
    }
    return g;
}

LabeledPermutation canonical_cycle(const MapParameters& params) {
    return canonical_cycle(params.row_sizes());
}

long cycle_count(const LabeledPermutation& perm) {
    const auto& p = perm.row_sizes();
    std::vector<long> offset(p.size() + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) offset[i + 1] = offset[i] + p[i];
    auto flat = [&](const GroundElement& e) {
        return offset[static_cast<size_t>(e.row - 1)] + e.pos - 1;
    };
    std::vector<char> seen(static_cast<size_t>(perm.ground_size()), 0);
    long cycles = 0;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int x = 1; x <= p[static_cast<size_t>(i - 1)]; ++x) {
            GroundElement e{i, x};
            if (seen[static_cast<size_t>(flat(e))]) continue;
            ++cycles;
            while (!seen[static_cast<size_t>(flat(e))]) {
                seen[static_cast<size_t>(flat(e))] = 1;
                e = perm.apply(e);
            }
        }
    return cycles;
}

LabeledPermutation compose(const LabeledPermutation& a, const LabeledPermutation& b) {
    if (a.row_sizes() != b.row_sizes())
        throw std::invalid_argument("compose: mismatched ground sets");
    auto r = LabeledPermutation::identity(a.row_sizes());
    const auto& p = a.row_sizes();
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int x = 1; x <= p[static_cast<size_t>(i - 1)]; ++x)
            r.set_image({i, x}, a.apply(b.apply({i, x})));
    return r;
}

LabeledPermutation invert(const LabeledPermutation& a) {
    auto r = LabeledPermutation::identity(a.row_sizes());
    const auto& p = a.row_sizes();
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int x = 1; x <= p[static_cast<size_t>(i - 1)]; ++x)
            r.set_image(a.apply({i, x}), {i, x});
    return r;
}

Pairing::Pairing(std::vector<std::pair<GroundElement, GroundElement>> pairs)
    : pairs_(std::move(pairs)) {
    for (auto& [u, v] : pairs_) {
        if (u == v) throw std::invalid_argument("Pairing: element paired with itself");
        if (v < u) std::swap(u, v);
    }
    std::sort(pairs_.begin(), pairs_.end());
    for (size_t i = 0; i + 1 < pairs_.size(); ++i)
        if (pairs_[i].first == pairs_[i + 1].first)
            throw std::invalid_argument("Pairing: repeated element");
}

LabeledPermutation Pairing::as_permutation(const std::vector<int>& row_sizes) const {
    auto r = LabeledPermutation::identity(row_sizes);
    for (const auto& [u, v] : pairs_) {
        r.set_image(u, v);
        r.set_image(v, u);
    }
    if (!r.is_bijection()) throw std::invalid_argument("Pairing: not a matching");
    return r;
}

void Pairing::tally(std::vector<int>& loops, MixedCounts& mixed) const {
    for (const auto& [u, v] : pairs_) {
        if (u.row == v.row)
            ++loops[static_cast<size_t>(u.row - 1)];
        else
            mixed.set(u.row, v.row, mixed.at(u.row, v.row) + 1);
    }
}

std::string Pairing::key() const {
    std::ostringstream os;
    for (const auto& [u, v] : pairs_)
        os << u.row << "." << u.pos << "-" << v.row << "." << v.pos << ";";
    return os.str();
}

SupportGraph support_graph(const MixedCounts& s) {
    SupportGraph g;
    g.n = s.n();
    for (int i = 1; i <= g.n; ++i)
        for (int k = i + 1; k <= g.n; ++k)
            if (s.at(i, k) > 0) g.edges.emplace_back(i, k);
    return g;
}

SupportGraph support_graph(const MapParameters& params) { return support_graph(params.s_matrix()); }

bool is_tree(const SupportGraph& g) {
    if (g.n <= 0) return false;
    if (static_cast<int>(g.edges.size()) != g.n - 1) return false;
    // Connectivity by union-find.
    std::vector<int> parent(static_cast<size_t>(g.n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    int components = g.n;
    for (auto [i, k] : g.edges) {
        int a = find(i), b = find(k);
        if (a != b) {
            parent[static_cast<size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

std::vector<std::pair<int, int>> edge_ordering(const SupportGraph& g) {
    if (!is_tree(g)) throw std::invalid_argument("edge_ordering: support graph is not a tree");
    const int n = g.n;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
    for (auto [i, k] : g.edges) {
        adj[static_cast<size_t>(i)].push_back(k);
        adj[static_cast<size_t>(k)].push_back(i);
    }
    std::vector<char> removed(static_cast<size_t>(n) + 1, 0);
    std::vector<int> degree(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) degree[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());

    std::vector<std::pair<int, int>> e(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int step = 0; step < n - 1; ++step) {
        int leaf = 0;
        for (int v = 1; v < n; ++v)
            if (!removed[static_cast<size_t>(v)] && degree[static_cast<size_t>(v)] == 1) {
                leaf = v;
                break;
            }
        if (leaf == 0) throw std::logic_error("edge_ordering: no removable leaf");
        int other = 0;
        for (int w : adj[static_cast<size_t>(leaf)])
            if (!removed[static_cast<size_t>(w)]) {
                other = w;
                break;
            }
        e[static_cast<size_t>(leaf - 1)] = {std::min(leaf, other), std::max(leaf, other)};
        removed[static_cast<size_t>(leaf)] = 1;
        --degree[static_cast<size_t>(other)];
    }
    return e;
}

}  // namespace treemaps
