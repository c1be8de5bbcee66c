// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion delegates to a verification suite over the standard grid
// (m in {1,2}, n in {2,3,4}, m=2 capped at n=3, the four weight families).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "wfm/verify.hpp"

int main() {
    using namespace wfm;
    struct Criterion {
        const char* label;
        const char* suite;
    };
    const std::vector<Criterion> criteria{
        {"cross-oracle Betti agreement over the full grid", "cross-oracle"},
        {"pinned Betti tables and tensor-power degenerations", "pinned"},
        {"Poincare symmetry of every computed table", "symmetry"},
        {"Hilbert functions invariant under admissible reorderings", "order-invariance"},
        {"overlap products and J_S multiples vanish in the quotient", "ideal-vanishing"},
        {"reduction composition law and disjoint-glue identity", "morphisms"},
        {"k-stable weights reproduce the threshold building sets", "mustata"},
        {"prefix building-set checks for canonical and inductive orders", "prefix"},
        {"degree pairing matches the blowup-formula oracle", "degree"},
        {"low-degree ranks from plain linear algebra", "low-degree"},
    };

    bool all_pass = true;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        auto t0 = std::chrono::steady_clock::now();
        VerifyReport rep = run_verify_suite(c.suite, /*seed=*/1);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        bool ok = rep.pass();
        all_pass = all_pass && ok;
        std::printf("criterion %2d: %-62s %s (%lld ms)\n", index, c.label,
                    ok ? "PASS" : "FAIL", static_cast<long long>(ms));
        if (!ok)
            for (const VerifyCheck& chk : rep.checks)
                if (!chk.pass)
                    std::printf("              FAIL %s -- %s\n", chk.name.c_str(),
                                chk.detail.c_str());
    }
    std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
