#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "morphisms.hpp"
#include "nests.hpp"
#include "sampling.hpp"

namespace wfm {

/// One named pass/fail outcome inside a suite.
struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;

    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back(VerifyCheck{std::move(name), ok, std::move(detail)});
    }
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const VerifyCheck& c) { return c.pass; });
    }
    int failed() const {
        return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                              [](const VerifyCheck& c) { return !c.pass; }));
    }
};

/// One cell of the standard desk-scale grid the randomized and cross-oracle
/// suites run over.
struct GridInstance {
    int m = 1;
    int n = 2;
    WeightVector A;
    std::string tag;
};

namespace detail {

inline WeightVector uniform_weights(int n, Rat v) {
    return WeightVector{std::vector<Rat>(static_cast<std::size_t>(n), std::move(v))};
}

} // namespace detail

/// The verification grid: m in {1,2}, n in {2,3,4} with m = 2 capped at
/// n = 3; weights all-1, all-1/2, every Mustata vector, and the mixed vector
/// (1,...,1,1/2,1/2); duplicates (the families overlap a lot) appear once.
inline std::vector<GridInstance> acceptance_grid() {
    std::vector<GridInstance> grid;
    auto add = [&grid](int m, int n, WeightVector A) {
        for (const GridInstance& I : grid)
            if (I.m == m && I.n == n && I.A == A) return;
        std::string tag =
            "m=" + std::to_string(m) + " n=" + std::to_string(n) + " A=(" + A.str() + ")";
        grid.push_back(GridInstance{m, n, std::move(A), std::move(tag)});
    };
    for (int m : {1, 2})
        for (int n = 2; n <= (m == 1 ? 4 : 3); ++n) {
            add(m, n, detail::uniform_weights(n, Rat(1)));
            add(m, n, detail::uniform_weights(n, Rat(1, 2)));
            for (int k = 0; k < n; ++k) add(m, n, mustata_weights(n, k));
            std::vector<Rat> mixed(static_cast<std::size_t>(n), Rat(1));
            mixed[static_cast<std::size_t>(n) - 2] = Rat(1, 2);
            mixed[static_cast<std::size_t>(n) - 1] = Rat(1, 2);
            add(m, n, WeightVector{std::move(mixed)});
        }
    return grid;
}

/// Hilbert functions must not see the admissible order: recompute with
/// seeded in-block shuffles of the canonical order and compare.
inline VerifyReport verify_order_invariance(std::uint64_t seed = 1, const Caps& caps = {}) {
    VerifyReport rep{"order-invariance", {}};
    Sampler rng(seed);
    for (const GridInstance& I : acceptance_grid()) {
        CellularBase base = projective_space(I.m);
        OrderedBuildingSet G = building_set(I.A);
        BettiTable ref = hilbert_function(chow_presentation(base, G), caps);
        bool ok = true;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            OrderedBuildingSet H = reorder(G, rng.admissible_order(G));
            ok = hilbert_function(chow_presentation(base, H), caps) == ref;
        }
        rep.add(I.tag, ok, "5 reorders, ranks " + ref.str());
    }
    return rep;
}

/// Poincare duality at the numerical level: both rank computations must
/// produce palindromic tables with 1 at both ends.
inline VerifyReport verify_symmetry(const Caps& caps = {}) {
    VerifyReport rep{"symmetry", {}};
    auto palindromic = [](const BettiTable& B, int top) {
        if (static_cast<int>(B.ranks.size()) != top + 1) return false;
        if (B.ranks.front() != 1 || B.ranks.back() != 1) return false;
        for (std::size_t k = 0; k < B.ranks.size(); ++k)
            if (B.ranks[k] != B.ranks[B.ranks.size() - 1 - k]) return false;
        return true;
    };
    for (const GridInstance& I : acceptance_grid()) {
        CellularBase base = projective_space(I.m);
        OrderedBuildingSet G = building_set(I.A);
        BettiTable H = hilbert_function(chow_presentation(base, G), caps);
        BettiTable K = keel_betti(base, G, caps);
        bool ok = palindromic(H, I.m * I.n) && palindromic(K, I.m * I.n);
        rep.add(I.tag, ok, "ranks " + H.str());
    }
    return rep;
}

/// The presented ideal must kill every product of overlapping divisor
/// classes and every J_S-multiple of D^S.
inline VerifyReport verify_ideal_vanishing(const Caps& caps = {}) {
    VerifyReport rep{"ideal-vanishing", {}};
    for (const GridInstance& I : acceptance_grid()) {
        CellularBase base = projective_space(I.m);
        OrderedBuildingSet G = building_set(I.A);
        Presentation P = chow_presentation(base, G);
        // Both product families are quadratic, so a degree-2 truncation of
        // the homogeneous ideal already decides their membership.
        ReducedGB gb = groebner_basis(P.ring, P.generators(), 2, caps);
        int overlap_pairs = 0, linear_products = 0;
        bool ok = true;
        for (std::size_t s = 0; s < G.size(); ++s) {
            MultiPoly Ds = var_poly(P.ring, static_cast<int>(s));
            for (std::size_t t = s + 1; t < G.size(); ++t)
                if (overlaps(G.at(static_cast<int>(s)), G.at(static_cast<int>(t)))) {
                    ++overlap_pairs;
                    if (!normal_form(gb, Ds * var_poly(P.ring, static_cast<int>(t))).is_zero())
                        ok = false;
                }
            for (const MultiPoly& g : j_ideal(P.ring, G.at(static_cast<int>(s)))) {
                ++linear_products;
                if (!normal_form(gb, g * Ds).is_zero()) ok = false;
            }
        }
        rep.add(I.tag, ok,
                std::to_string(overlap_pairs) + " overlap products, " +
                    std::to_string(linear_products) + " linear products");
    }
    return rep;
}

/// Reductions compose: for seeded chains C <= B <= A the extra centers glue
/// disjointly, and G_B plus the extra centers recovers G_A exactly.
inline VerifyReport verify_morphisms(std::uint64_t seed = 1, int triples = 100) {
    VerifyReport rep{"morphisms", {}};
    Sampler rng(seed);
    int composed = 0, glued = 0;
    bool comp_ok = true, glue_ok = true;
    for (int trial = 0; trial < triples; ++trial) {
        int n = rng.uniform(2, 8);
        WeightVector A = rng.weights(n);
        WeightVector B = rng.dominated(A);
        WeightVector C = rng.dominated(B);
        ++composed;
        if (!composition_check(A, B, C)) comp_ok = false;

        ReductionData red = reduction_centers(A, B);
        OrderedBuildingSet GA = building_set(A);
        OrderedBuildingSet GB = building_set(B);
        std::vector<std::uint64_t> merged;
        for (IndexSet S : red.extra_centers) merged.push_back(S.mask());
        for (IndexSet S : GB.elements()) merged.push_back(S.mask());
        std::sort(merged.begin(), merged.end());
        bool distinct = std::adjacent_find(merged.begin(), merged.end()) == merged.end();
        std::vector<std::uint64_t> whole;
        for (IndexSet S : GA.elements()) whole.push_back(S.mask());
        std::sort(whole.begin(), whole.end());
        ++glued;
        if (!distinct || merged != whole) glue_ok = false;
    }
    rep.add("composition law", comp_ok, std::to_string(composed) + " seeded triples, n <= 8");
    rep.add("disjoint glue G_A = extra + G_B", glue_ok, std::to_string(glued) + " seeded pairs");
    return rep;
}

/// Uniform eps = 1/(n-k) must produce exactly the k-stable building set
/// { S : |S| > n-k }, in the canonical order.
inline VerifyReport verify_mustata() {
    VerifyReport rep{"mustata", {}};
    for (int n = 2; n <= 7; ++n) {
        bool ok = true;
        for (int k = 1; k < n; ++k) {
            OrderedBuildingSet G = building_set(mustata_weights(n, k));
            std::vector<IndexSet> expect;
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                IndexSet S = IndexSet::from_mask(mask);
                if (S.size() >= 2 && S.size() > n - k) expect.push_back(S);
            }
            std::sort(expect.begin(), expect.end(), dim_order_less);
            if (G.elements() != expect) ok = false;
        }
        rep.add("n=" + std::to_string(n), ok, std::to_string(n - 1) + " values of k");
    }
    return rep;
}

/// Ascending-dimension orders and the inductive order must keep every prefix
/// a building set; the classic triangle of pair diagonals must not.
inline VerifyReport verify_prefix(std::uint64_t seed = 1) {
    VerifyReport rep{"prefix", {}};
    auto passes = [](const OrderedBuildingSet& G) {
        std::vector<IndexSet> canonical = G.elements();
        return prefix_is_building_set(canonical, G) && prefix_is_building_set(fm_order(G), G);
    };
    bool ones_ok = true;
    for (int n = 2; n <= 6; ++n)
        if (!passes(building_set(detail::uniform_weights(n, Rat(1))))) ones_ok = false;
    rep.add("all-1 weights, n <= 6", ones_ok, "canonical and inductive orders");

    Sampler rng(seed);
    bool random_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.uniform(2, 6);
        if (!passes(building_set(rng.weights(n)))) random_ok = false;
    }
    rep.add("20 seeded weight vectors", random_ok, "n <= 6");

    std::vector<IndexSet> triangle{IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{2, 3}};
    rep.add("non-example {12},{13},{23}", !prefix_is_building_set(triangle),
            "pairwise unions missing");
    return rep;
}

/// The two rank computations share no code path beyond the polynomial core;
/// exact agreement across the grid is the main correctness oracle.
inline VerifyReport verify_cross_oracle(const Caps& caps = {}) {
    VerifyReport rep{"cross-oracle", {}};
    for (const GridInstance& I : acceptance_grid()) {
        CellularBase base = projective_space(I.m);
        OrderedBuildingSet G = building_set(I.A);
        BettiTable H = hilbert_function(chow_presentation(base, G), caps);
        BettiTable K = keel_betti(base, G, caps);
        rep.add(I.tag, H == K, H == K ? "both " + H.str() : H.str() + " vs " + K.str());
    }
    return rep;
}

/// Hand-checked tables, plus the tensor-power tables for weight vectors with
/// no blowup centers at all.
inline VerifyReport verify_pinned(const Caps& caps = {}) {
    VerifyReport rep{"pinned", {}};
    struct Pin {
        int m;
        std::string weights;
        std::vector<long long> ranks;
    };
    const std::vector<Pin> pins{
        {1, "1,1", {1, 2, 1}},
        {1, "1,1,1", {1, 4, 4, 1}},
        {1, "1/2,1/2,1/2", {1, 4, 4, 1}},
        {1, "1,1,1,1", {1, 9, 16, 9, 1}},
        {2, "1,1", {1, 3, 4, 3, 1}},
        {2, "1,1,1", {1, 7, 17, 22, 17, 7, 1}},
    };
    for (const Pin& pin : pins) {
        WeightVector A = parse_weights(pin.weights);
        CellularBase base = projective_space(pin.m);
        OrderedBuildingSet G = building_set(A);
        BettiTable H = hilbert_function(chow_presentation(base, G), caps);
        BettiTable K = keel_betti(base, G, caps);
        bool ok = H.ranks == pin.ranks && K.ranks == pin.ranks;
        rep.add("m=" + std::to_string(pin.m) + " A=(" + pin.weights + ")", ok,
                "expect " + BettiTable{{pin.ranks}}.str());
    }
    for (const GridInstance& I : acceptance_grid()) {
        Rat total = 0;
        for (const Rat& a : I.A.w) total += a;
        if (total > 1) continue;
        BettiTable H =
            hilbert_function(chow_presentation(projective_space(I.m), I.A), caps);
        BettiTable K = keel_betti(projective_space(I.m), I.A, caps);
        BettiTable expect{kunneth_table(I.m, I.n)};
        rep.add(I.tag + " (no centers)", H == expect && K == expect,
                "tensor-power table " + expect.str());
    }
    return rep;
}

namespace detail {

/// Independent intersection-number oracle for the triple-diagonal blowup of
/// (P^1)^3 at weights (1/2,1/2,1/2): the center Z is the small diagonal, a
/// P^1 with normal bundle O(2)^2, so with E the exceptional divisor,
/// integral(E^k) = -integral over Z of the Segre class s_{k-2}(N), computed
/// by inverting the total Chern class 1 + 4h as a power series.
inline long long segre_selfintersection(int k) {
    std::vector<long long> chern{1, 4}; // c(N) on Z = P^1, truncated past h
    std::vector<long long> segre(2, 0); // s = 1/c mod h^2
    segre[0] = 1;
    segre[1] = -chern[1] * segre[0];
    int codim = 2;
    if (k < codim || k - codim >= 2) return 0;
    long long integral = segre[static_cast<std::size_t>(k - codim)];
    return (k % 2 == 0) ? -integral : integral; // (-1)^{k-1} * s, integral of h over P^1 = 1
}

} // namespace detail

/// Degree pairing against the blowup-formula oracle and the fundamental
/// point class.
inline VerifyReport verify_degree(const Caps& caps = {}) {
    VerifyReport rep{"degree", {}};

    WeightVector half = detail::uniform_weights(3, Rat(1, 2));
    Presentation P = chow_presentation(projective_space(1), half);
    int e = P.ring.dvar(IndexSet{1, 2, 3});
    bool triple_ok = false;
    std::string detail_msg;
    if (e >= 0) {
        Int got = degree(pow(var_poly(P.ring, e), 3), P, caps);
        long long oracle = detail::segre_selfintersection(3);
        triple_ok = (got == oracle) && (oracle == -4);
        detail_msg = "degree(E^3) = " + got.str() + ", oracle " + std::to_string(oracle);
    }
    rep.add("m=1 n=3 A=(1/2,1/2,1/2) E^3", triple_ok, detail_msg);

    for (const GridInstance& I : acceptance_grid()) {
        Presentation Q = chow_presentation(projective_space(I.m), I.A);
        MultiPoly point = const_poly(Q.ring, Rat(1));
        for (int a = 1; a <= I.n; ++a) point = point * hpow(Q.ring, a, I.m);
        Int d = degree(point, Q, caps);
        rep.add(I.tag + " point class", d == 1, "degree " + d.str());
    }
    return rep;
}

/// Plain linear algebra over the generators must reproduce the Groebner
/// Hilbert function in degrees 0..2.
inline VerifyReport verify_low_degree(const Caps& caps = {}) {
    VerifyReport rep{"low-degree", {}};
    for (const GridInstance& I : acceptance_grid()) {
        Presentation P = chow_presentation(projective_space(I.m), I.A);
        int maxd = std::min(2, P.top_degree());
        std::vector<long long> ranks = low_degree_ranks(P, maxd, caps);
        BettiTable H = hilbert_function(P, caps);
        bool ok = true;
        for (int d = 0; d <= maxd; ++d)
            if (ranks[static_cast<std::size_t>(d)] != H.ranks[static_cast<std::size_t>(d)])
                ok = false;
        rep.add(I.tag, ok, "degrees 0..2 match");
    }
    return rep;
}

/// Canary: corrupt one Chern relation and require the two rank computations
/// to disagree — guards against both oracles silently degenerating.
inline VerifyReport verify_mutation(const Caps& caps = {}) {
    VerifyReport rep{"mutation", {}};
    CellularBase base = projective_space(1);
    OrderedBuildingSet G = building_set(detail::uniform_weights(3, Rat(1)));
    Presentation P = chow_presentation(base, G);
    int p = G.position(IndexSet{1, 2});
    MultiPoly u = var_poly(P.ring, 0) + var_poly(P.ring, 1);
    P.fam_chern[static_cast<std::size_t>(p)] =
        hpow(P.ring, 1, 1) + hpow(P.ring, 2, 1).scaled(Rat(2)) - u;
    BettiTable broken = hilbert_function(P, caps);
    BettiTable honest = keel_betti(base, G, caps);
    rep.add("wrong-sign Chern constant splits the oracles", broken.ranks != honest.ranks,
            broken.str() + " vs " + honest.str());
    return rep;
}

inline std::vector<std::string> verify_suite_names() {
    return {"order-invariance", "symmetry",     "ideal-vanishing", "morphisms",
            "mustata",          "prefix",       "mutation",        "cross-oracle",
            "pinned",           "degree",       "low-degree"};
}

/// Dispatch by suite name; unknown names are input errors.
inline VerifyReport run_verify_suite(const std::string& name, std::uint64_t seed,
                                     const Caps& caps = {}) {
    if (name == "order-invariance") return verify_order_invariance(seed, caps);
    if (name == "symmetry") return verify_symmetry(caps);
    if (name == "ideal-vanishing") return verify_ideal_vanishing(caps);
    if (name == "morphisms") return verify_morphisms(seed);
    if (name == "mustata") return verify_mustata();
    if (name == "prefix") return verify_prefix(seed);
    if (name == "mutation") return verify_mutation(caps);
    if (name == "cross-oracle") return verify_cross_oracle(caps);
    if (name == "pinned") return verify_pinned(caps);
    if (name == "degree") return verify_degree(caps);
    if (name == "low-degree") return verify_low_degree(caps);
    std::string all;
    for (const std::string& s : verify_suite_names()) all += (all.empty() ? "" : ", ") + s;
    throw InputError("unknown verify suite '" + name + "' (known: " + all + ")");
}

/// The default `verify` run: the structural suites plus the canary.  The
/// heavyweight cross-oracle/pinned/degree/low-degree suites are selectable
/// by name and always exercised by the acceptance binary.
inline std::vector<VerifyReport> run_default_verify(std::uint64_t seed, const Caps& caps = {}) {
    std::vector<VerifyReport> out;
    for (const char* name : {"order-invariance", "symmetry", "ideal-vanishing", "morphisms",
                             "mustata", "prefix", "mutation"})
        out.push_back(run_verify_suite(name, seed, caps));
    return out;
}

} // namespace wfm
