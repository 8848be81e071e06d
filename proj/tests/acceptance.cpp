// Acceptance suite: every criterion is an exact-equality check between a
// closed-form count and an independent brute-force enumeration (or a fixed
// worked instance), so all tolerances are zero.  Prints one line per
// criterion and exits non-zero if any of them fails.

#include "treemaps/verify.hpp"

#include <chrono>
#include <cstdio>
#include <thread>
#include <vector>

using namespace treemaps;

namespace {

struct Criterion {
    const char* label;
    SuiteReport (*run)(const VerifyOptions&);
};

SuiteReport run_substructures(const VerifyOptions& opt) {
    SuiteReport all{"substructures", {}};
    for (auto* fn : {verify_gamma, verify_delta, verify_lambda}) {
        SuiteReport rep = fn(opt);
        for (auto& c : rep.checks) all.checks.push_back(std::move(c));
    }
    return all;
}

// criteria 4 and 7 run the vertical-array grid up to K = 4
SuiteReport run_vertical_k4(const VerifyOptions& opt) {
    VerifyOptions wide = opt;
    wide.Kmax = 4;
    return verify_vertical(wide);
}

SuiteReport run_poly_k4(const VerifyOptions& opt) {
    VerifyOptions wide = opt;
    wide.Kmax = 4;
    return verify_polynomiality(wide);
}

}  // namespace

int main() {
    VerifyOptions opt;
    opt.qmax = 5;  // one-vertex series up to 945 pairings
    opt.dmax = 6;  // series comparisons up to 10395 pairings per instance
    opt.Kmax = 3;  // substructure and decomposition grids
    opt.smax = 4;
    opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    const std::vector<Criterion> criteria = {
        {"1. one-vertex series vs oracle and general formula (q = 1..5)", verify_hz},
        {"2. two-vertex series vs general formula vs oracle (d <= 5)", verify_gs},
        {"3. general series vs oracle, n = 3,4 paths and stars (d <= 6)", verify_main},
        {"4. vertical-array counts: formula vs enumeration vs polynomial (K <= 4)",
         run_vertical_k4},
        {"5. substructure formulas vs exhaustive enumeration (K <= 3, s <= 4)",
         run_substructures},
        {"6. leaf-row decomposition: round trip and per-P image counts", verify_zeta},
        {"7. polynomiality: interpolated counts reassemble the polynomials", run_poly_k4},
        {"8. colouring identity and canonical-array counts (total degree <= 6)",
         verify_paired_functions},
        {"9. worked decomposition instance: positions {1,2,5}, P = 3", verify_worked_example},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const SuiteReport rep = c.run(opt);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = rep.all_ok();
        std::printf("[%s] %s  (%ld checks, %.2fs)\n", ok ? "PASS" : "FAIL", c.label,
                    static_cast<long>(rep.checks.size()), secs);
        if (!ok) {
            ++failures;
            for (const auto& chk : rep.checks)
                if (!chk.ok)
                    std::printf("       %s\n         lhs=%s\n         rhs=%s\n", chk.name.c_str(),
                                chk.lhs.c_str(), chk.rhs.c_str());
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
