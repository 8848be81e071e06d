#ifndef TREEMAPS_VERIFY_HPP
#define TREEMAPS_VERIFY_HPP

// Oracle-vs-formula verification suites.  Every suite enumerates a grid of
// instances, computes both sides exactly, and reports one result per
// instance.  Instances can fan out to a worker pool; the report order is
// deterministic regardless of scheduling.

#include "treemaps/arrays.hpp"
#include "treemaps/core.hpp"

#include <string>
#include <vector>

namespace treemaps {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string lhs;  // both values are reported on failure
    std::string rhs;
    bool operator==(const CheckResult&) const = default;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    long passed() const;
    long failed() const;
    bool all_ok() const { return failed() == 0; }
    bool operator==(const SuiteReport&) const = default;
};

struct VerifyOptions {
    int qmax = 5;   // one-vertex series range
    int dmax = 6;   // total pair count cap for series comparisons
    int Kmax = 3;   // column range for array/substructure grids
    int smax = 4;   // vertex budget for substructure grids
    int jobs = 1;   // worker threads
};

// q = 1..qmax: pairing enumeration vs the one-vertex formula vs the series.
SuiteReport verify_hz(const VerifyOptions& opt = {});

// Two-row instances with q_i <= 2, 1 <= s <= 3, d <= 5: two-vertex formula
// vs general series vs pairing enumeration.
SuiteReport verify_gs(const VerifyOptions& opt = {});

// n = 3, 4 path and star shapes, s entries in {1,2}, q entries in {0,1},
// d <= dmax: general series vs pairing enumeration.
SuiteReport verify_main(const VerifyOptions& opt = {});

// All trees on n <= 3 vertices with edge values <= 2, K <= Kmax(<=4 by
// default grid), every R: closed form vs brute-force array enumeration,
// and the polynomial form evaluated at K.
SuiteReport verify_vertical(const VerifyOptions& opt = {});

// Interpolation cross-checks: the numeric vertical counts at K = 1..deg+1
// reassemble the polynomial form, and the canonical counts reassemble the
// series.
SuiteReport verify_polynomiality(const VerifyOptions& opt = {});

// Substructure closed forms vs exhaustive enumeration.
SuiteReport verify_gamma(const VerifyOptions& opt = {});
SuiteReport verify_delta(const VerifyOptions& opt = {});
SuiteReport verify_lambda(const VerifyOptions& opt = {});

// Leaf-row decomposition: round trips plus per-P image counts against the
// decomposition formula (3 rows, path shape, unit edges).
SuiteReport verify_zeta(const VerifyOptions& opt = {});

// Colouring identity: direct paired-function counts equal sum_L a_L K^L for
// every profile with total degree <= 6, K <= 3; canonical-array counts agree
// on the small grid.
SuiteReport verify_paired_functions(const VerifyOptions& opt = {});

// The fixed worked 3-row decomposition instance (positions {1,2,5}, P = 3).
SuiteReport verify_worked_example(const VerifyOptions& opt = {});

// Named dispatch: hz, gs, main, vertical, poly, gamma, delta, lambda, zeta,
// pf, figure, or all.  Throws std::invalid_argument on unknown names.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});
std::vector<std::string> suite_names();

// The fixed worked decomposition instance used by the figure suite.
PairedArray worked_example_array();

}  // namespace treemaps

#endif
