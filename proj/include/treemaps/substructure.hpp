#ifndef TREEMAPS_SUBSTRUCTURE_HPP
#define TREEMAPS_SUBSTRUCTURE_HPP

// Substructures of arrowed arrays: constraint records that pin down cell
// occupancies, marks and arrows at three levels of aggregation, plus the
// closed-form counts T(Gamma), T(Delta), T(Lambda) and the brute-force
// enumeration they are verified against.
//
// Columns are 1-based throughout; `phi` maps arrow-tail columns to the
// columns they point to.

#include "treemaps/arrays.hpp"

#include <map>
#include <set>
#include <vector>

namespace treemaps {

// Fixes everything except the matching: per-cell occupancies of both rows,
// both mark sets, and the arrows.
struct GammaSub {
    int K = 0;
    std::vector<int> w1, w2;  // size K each
    std::set<int> r1, r2;
    std::map<int, int> phi;

    int s() const;  // total vertices per row
};

// Fixes a common occupancy for both rows (so the balance condition holds),
// the row-1 marks and the arrows; row-2 marks range freely.
struct DeltaSub {
    int K = 0;
    std::vector<int> w;  // size K
    std::set<int> r1;
    std::map<int, int> phi;

    int s() const;
};

// Fixes the non-critical row-1 occupancy x, a column set P that carries the
// row-1 marks, and the arrows; each unmarked column of P gets one extra
// (critical) vertex.  Row-1 marks range over R1-subsets of P, row-2 marks
// range freely.
struct LambdaSub {
    int K = 0;
    std::vector<int> x;  // size K, zero outside dom(phi) and P
    std::set<int> p;
    std::map<int, int> phi;

    int s(int R1) const;  // sum x + |P| - R1
};

// --- brute-force counts (forest condition enforced per the ambient set) ----

BigInt enumerate_substructure(const GammaSub& g);
BigInt enumerate_substructure(const DeltaSub& d, int R2);
BigInt enumerate_substructure(const LambdaSub& l, int R1, int R2);

// --- arrow simplification ----------------------------------------------------

bool phi_has_cycle(const std::map<int, int>& phi);

// One simplification step, deterministic (smallest applicable tail;
// re-marking before contraction).  Empty when already irreducible or cyclic.
std::optional<GammaSub> simplify_step(const GammaSub& g);
std::optional<DeltaSub> simplify_step(const DeltaSub& d);
std::optional<LambdaSub> simplify_step(const LambdaSub& l);

template <typename Sub>
struct SimplifyOutcome {
    Sub sub;
    bool has_cycle = false;  // counts are 0 downstream when set
};

SimplifyOutcome<GammaSub> arrow_simplify(GammaSub g);
SimplifyOutcome<DeltaSub> arrow_simplify(DeltaSub d);
SimplifyOutcome<LambdaSub> arrow_simplify(LambdaSub l);

bool is_irreducible(const GammaSub& g);
bool is_irreducible(const DeltaSub& d);
bool is_irreducible(const LambdaSub& l);

// Delta is admissible when it is irreducible and every arrow-head cell
// contains a vertex.
bool is_admissible(const DeltaSub& d);

// --- column types of an irreducible Gamma -----------------------------------

// The eight types partition the K columns: plain columns split by their mark
// pattern (A unmarked/unmarked, B marked/unmarked, C unmarked/marked, D
// marked/marked), arrow-tail columns split by target type (A or C) and their
// own row-2 mark (bar unmarked, tilde marked).
enum class ColumnType { A, B, C, D, Abar, Atil, Cbar, Ctil };

struct ColumnTypePartition {
    std::map<ColumnType, std::vector<int>> columns;
    long column_count(ColumnType t) const;
    long vertex_count(ColumnType t, int row, const GammaSub& g) const;  // row 1 or 2
};

ColumnTypePartition classify_columns(const GammaSub& g);  // throws when reducible

// --- closed forms -------------------------------------------------------------

// Irreducible, full Gamma; defined for s >= A + 1 and throws below.
BigRational t_gamma(const GammaSub& g, const ColumnTypePartition& part);
BigRational t_gamma(const GammaSub& g);  // classifies internally

// Irreducible Delta with every w_j > 0.
BigInt t_delta(const DeltaSub& d, int R2);

// Admissible Delta; agrees with t_delta on the common domain.
BigRational t_delta_admissible(const DeltaSub& d, int R2);

// Lambda whose arrows form a forest rooted at P; requires s >= 1.
BigRational t_lambda(const LambdaSub& l, int R1, int R2);

// The bare numeric core of T(Lambda): it depends only on the grid width K,
// the root-column count P, the ambient mark counts and the pair count s.
BigRational lambda_count_formula(int K, int P, int R1, int R2, int s);

}  // namespace treemaps

#endif
