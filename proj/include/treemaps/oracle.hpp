#ifndef TREEMAPS_ORACLE_HPP
#define TREEMAPS_ORACLE_HPP

// Brute-force ground truth: enumerate every pairing with a prescribed
// (q; s) profile directly from the definitions and tally the cycle counts
// of mu*gamma^{-1}.  Nothing here knows about the closed-form formulas.

#include "treemaps/core.hpp"
#include "treemaps/polynomial.hpp"

#include <functional>
#include <map>

namespace treemaps {

// Cycle count L -> number of pairings a_{n,L}.
class FaceDistribution {
public:
    void add(long L) { ++counts_[L]; }
    void set(long L, BigInt count) { counts_[L] = std::move(count); }
    const std::map<long, BigInt>& counts() const { return counts_; }
    BigInt total() const;
    Polynomial series() const;  // sum_L a_L x^L
    bool operator==(const FaceDistribution&) const = default;

private:
    std::map<long, BigInt> counts_;
};

// Visits every pairing of [p_1,...,p_n] with exactly q_i same-row pairs in
// row i and s_{i,k} pairs between rows i and k, each exactly once.  The
// enumeration repeatedly matches the smallest unmatched element, so the
// stream is duplicate-free by construction.
void for_each_pairing(const MapParameters& params,
                      const std::function<void(const Pairing&)>& visit);

BigInt count_pairings(const MapParameters& params);

FaceDistribution face_distribution(const MapParameters& params);

Polynomial oracle_series(const MapParameters& params);

// Counts pairs (mu, pi) where pi: ground set -> [K] satisfies
// pi(mu(v)) = pi(gamma(v)) for every v, checking each colouring directly.
// Throws std::length_error when K^(sum p_i) exceeds max_colourings.
BigInt paired_function_count_direct(const MapParameters& params, int K,
                                    double max_colourings = 2e7);

}  // namespace treemaps

#endif
