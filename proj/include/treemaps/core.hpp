#ifndef TREEMAPS_CORE_HPP
#define TREEMAPS_CORE_HPP

// Domain types for pairings over a multi-row labelled ground set.
//
// The ground set [p_1,...,p_n] consists of elements (row, position) with
// row in [1,n] and position in [1,p_row].  A pairing is a perfect matching
// on the ground set; the canonical cycle gamma rotates each row; the number
// of faces of the corresponding map is the cycle count of mu*gamma^{-1}.

#include "treemaps/exact.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace treemaps {

struct GroundElement {
    int row = 0;  // 1-based
    int pos = 0;  // 1-based within the row
    auto operator<=>(const GroundElement&) const = default;
};

// Symmetric n x n matrix of mixed-pair counts with zero diagonal.
class MixedCounts {
public:
    MixedCounts() = default;
    explicit MixedCounts(int n) : n_(n), v_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int at(int i, int k) const;       // 1-based, symmetric; at(i,i) == 0
    void set(int i, int k, int val);  // i != k

    int row_total(int i) const;  // s_i = sum over k != i

    bool operator==(const MixedCounts&) const = default;

private:
    int n_ = 0;
    std::vector<int> v_;
};

// Vertex count n, per-row loop counts q, mixed-pair counts s.
// Derived: p_i = 2 q_i + s_i and the total pair count d.
class MapParameters {
public:
    MapParameters(std::vector<int> q, MixedCounts s);

    int n() const { return static_cast<int>(q_.size()); }
    int q(int i) const { return q_[static_cast<size_t>(i - 1)]; }
    int s(int i, int k) const { return s_.at(i, k); }
    const MixedCounts& s_matrix() const { return s_; }
    int s_row(int i) const { return s_.row_total(i); }
    int p(int i) const { return 2 * q(i) + s_row(i); }
    int total_pairs() const;  // d
    std::vector<int> row_sizes() const;

private:
    std::vector<int> q_;
    MixedCounts s_;
};

// Convenience builder: edges given as (i, k, count) triples, 1-based.
MapParameters make_parameters(std::vector<int> q,
                              const std::vector<std::tuple<int, int, int>>& mixed_edges);

// A bijection on the ground set of fixed row sizes p.
class LabeledPermutation {
public:
    static LabeledPermutation identity(std::vector<int> row_sizes);

    const std::vector<int>& row_sizes() const { return p_; }
    long ground_size() const;

    GroundElement apply(const GroundElement& e) const;
    void set_image(const GroundElement& from, const GroundElement& to);

    // Checks that every element is hit exactly once.
    bool is_bijection() const;

    bool operator==(const LabeledPermutation&) const = default;

private:
    explicit LabeledPermutation(std::vector<int> p);
    long flat(const GroundElement& e) const;
    GroundElement unflat(long ix) const;

    std::vector<int> p_;
    std::vector<long> offset_;
    std::vector<long> img_;
};

// gamma: one cycle per row, (i, x) -> (i, x+1 mod p_i); empty rows contribute
// nothing.
LabeledPermutation canonical_cycle(const std::vector<int>& row_sizes);
LabeledPermutation canonical_cycle(const MapParameters& params);

// Number of orbits, counting fixed points; 0 on the empty ground set.
long cycle_count(const LabeledPermutation& perm);

// (a o b)(x) = a(b(x)); throws std::invalid_argument on mismatched ground sets.
LabeledPermutation compose(const LabeledPermutation& a, const LabeledPermutation& b);
LabeledPermutation invert(const LabeledPermutation& a);

// A perfect matching on the ground set, stored as unordered pairs.
class Pairing {
public:
    Pairing() = default;
    explicit Pairing(std::vector<std::pair<GroundElement, GroundElement>> pairs);

    const std::vector<std::pair<GroundElement, GroundElement>>& pairs() const { return pairs_; }
    size_t size() const { return pairs_.size(); }

    // The pairing as a fixed-point-free involution on the given ground set.
    LabeledPermutation as_permutation(const std::vector<int>& row_sizes) const;

    // Counts classified against (q; s): loops[i-1] = same-row pairs of row i,
    // mixed.at(i,k) = pairs between rows i and k.
    void tally(std::vector<int>& loops, MixedCounts& mixed) const;

    // Canonical form: each pair ordered, pairs sorted.
    std::string key() const;

private:
    std::vector<std::pair<GroundElement, GroundElement>> pairs_;
};

struct SupportGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < k, 1-based
};

SupportGraph support_graph(const MixedCounts& s);
SupportGraph support_graph(const MapParameters& params);

// Connected with exactly n-1 edges.
bool is_tree(const SupportGraph& g);

// Edges e_1..e_{n-1} with e_j incident to vertex j, computed by repeatedly
// removing the smallest leaf different from vertex n.  Throws on non-trees.
std::vector<std::pair<int, int>> edge_ordering(const SupportGraph& g);

}  // namespace treemaps

#endif
