#ifndef TREEMAPS_FORMULA_HPP
#define TREEMAPS_FORMULA_HPP

// Closed-form counts: the number of proper vertical arrays (numeric and as a
// polynomial in the column count), the canonical-array count, the genus
// generating series for tree-shaped parameters, and its one- and two-vertex
// special cases.

#include "treemaps/core.hpp"
#include "treemaps/polynomial.hpp"

namespace treemaps {

// Number of proper vertical arrays with K columns, marks-per-row R and
// mixed-pair profile s; requires a tree-shaped s and R >= 1.  Evaluates the
// nested factorial sum; out-of-range R gives 0.
BigInt v_numeric(int K, const std::vector<int>& R, const MixedCounts& s);

// The same count as a polynomial in the column count, via the
// rising-factorial form with K-independent summation bounds.
Polynomial v_poly(const std::vector<int>& R, const MixedCounts& s);

// Number of proper paired arrays with one mark per row: the vertical-array
// counts summed over the ways of removing same-row pairs.
BigInt canonical_count(const MapParameters& params, int K);

// The genus generating series A(x) = sum_L a_L x^L for tree-shaped s; the
// coefficient of x^L counts pairings whose map has L faces.  Requires every
// row degree p_i to be positive.
Polynomial main_series(const MapParameters& params);

// One-vertex series: (2q-1)!! * sum_k 2^(k-1) C(q,k-1) C(x,k).
Polynomial harer_zagier(int q);

// Two-vertex series with q1, q2 loops and s >= 1 connecting edges.
Polynomial goulden_slofstra(int q1, int q2, int s);

// main_series specialised to one row equals the one-vertex series.
bool hz_reduction_check(int q);

// Degree bound d - n + 2 for the series of a connected map class.
long series_degree_bound(const MapParameters& params);

}  // namespace treemaps

#endif
