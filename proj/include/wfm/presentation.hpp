#pragma once

#include <string>
#include <utility>
#include <vector>

#include "base_geometry.hpp"
#include "building_set.hpp"
#include "chern.hpp"
#include "errors.hpp"
#include "poly.hpp"

namespace wfm {

/// Generators of the Chow-ring presentation, kept per family.  `stage` is
/// -1 for the closed-form presentation of the compactification itself and
/// j >= 0 for the presentation of the j-th intermediate blowup, whose ring
/// carries divisor variables for positions 0..j only.
struct Presentation {
    CellularBase base;
    OrderedBuildingSet G;
    Ring ring;
    int stage = -1;

    std::vector<MultiPoly> fam_base;
    std::vector<MultiPoly> fam_overlap;
    std::vector<MultiPoly> fam_linear;
    std::vector<MultiPoly> fam_weak;
    std::vector<MultiPoly> fam_chern;

    int top_degree() const { return base.m * G.n(); }

    std::vector<MultiPoly> generators() const {
        std::vector<MultiPoly> all;
        for (const auto* fam : {&fam_base, &fam_overlap, &fam_linear, &fam_weak, &fam_chern})
            all.insert(all.end(), fam->begin(), fam->end());
        return all;
    }

    std::size_t generator_count() const {
        return fam_base.size() + fam_overlap.size() + fam_linear.size() + fam_weak.size() +
               fam_chern.size();
    }
};

namespace detail {

inline std::vector<MultiPoly> truncation_family(const Ring& ring, const CellularBase& base) {
    std::vector<MultiPoly> fam;
    for (int a = 1; a <= ring.n(); ++a) fam.push_back(hpow(ring, a, base.m + 1));
    return fam;
}

/// All T with |T| >= 2 meeting S in exactly one element, masks ascending.
inline std::vector<IndexSet> weak_overlap_partners(int n, IndexSet S) {
    std::vector<IndexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        IndexSet T = IndexSet::from_mask(mask);
        if (T.size() >= 2 && weak_overlap(S, T)) out.push_back(T);
    }
    return out;
}

/// P_{Delta_T}(-u) where u is a sum of divisor variables.
inline MultiPoly diagonal_at(const Ring& ring, const CellularBase& base, IndexSet T,
                             const MultiPoly& u) {
    return chern_eval(chern_poly_diagonal(ring, base, T), -u);
}

} // namespace detail

/// Presentation of the Chow ring of the compactification: relations are the
/// base truncations h_a^{m+1}, products of overlapping divisors, the linear
/// differences J_S * D^S, the weak-overlap relations, and one Chern-type
/// relation per building-set element.
inline Presentation chow_presentation(const CellularBase& base, const OrderedBuildingSet& G) {
    Presentation P;
    P.base = base;
    P.G = G;
    P.ring = Ring(G.n(), base.m, G.elements());
    P.stage = -1;
    const Ring& ring = P.ring;
    const int g = static_cast<int>(G.size());

    P.fam_base = detail::truncation_family(ring, base);

    for (int p = 0; p < g; ++p)
        for (int q = p + 1; q < g; ++q)
            if (overlaps(G.at(p), G.at(q)))
                P.fam_overlap.push_back(var_poly(ring, p) * var_poly(ring, q));

    for (int p = 0; p < g; ++p)
        for (const MultiPoly& lin : j_ideal(ring, G.at(p)))
            P.fam_linear.push_back(lin * var_poly(ring, p));

    for (int p = 0; p < g; ++p) {
        IndexSet S = G.at(p);
        for (IndexSet T : detail::weak_overlap_partners(G.n(), S)) {
            IndexSet U = S | T; // in G by upward closure
            MultiPoly u;
            for (int l = 0; l < g; ++l)
                if (U.subset_of(G.at(l))) u = u + var_poly(ring, l);
            P.fam_weak.push_back(var_poly(ring, p) * detail::diagonal_at(ring, base, T, u));
        }
    }

    for (int p = 0; p < g; ++p) {
        IndexSet S = G.at(p);
        MultiPoly u;
        for (int l = 0; l < g; ++l)
            if (S.subset_of(G.at(l))) u = u + var_poly(ring, l);
        P.fam_chern.push_back(detail::diagonal_at(ring, base, S, u));
    }

    return P;
}

inline Presentation chow_presentation(const CellularBase& base, const WeightVector& A) {
    return chow_presentation(base, building_set(A));
}

/// Presentation of the j-th intermediate blowup: divisor variables exist
/// for positions 0..j, and every index sum is truncated at the stage where
/// the relevant strict transform was last visible.
inline Presentation stage_presentation(const CellularBase& base, const OrderedBuildingSet& G,
                                       int j) {
    const int g = static_cast<int>(G.size());
    if (j < 0 || j >= g)
        throw InputError("stage index " + std::to_string(j) + " out of range [0, " +
                         std::to_string(g) + ")");
    Presentation P;
    P.base = base;
    P.G = G;
    std::vector<IndexSet> dsets(G.elements().begin(), G.elements().begin() + j + 1);
    P.ring = Ring(G.n(), base.m, std::move(dsets));
    P.stage = j;
    const Ring& ring = P.ring;

    P.fam_base = detail::truncation_family(ring, base);

    for (int p = 0; p <= j; ++p)
        for (int q = p + 1; q <= j; ++q)
            if (overlaps(G.at(p), G.at(q)))
                P.fam_overlap.push_back(var_poly(ring, p) * var_poly(ring, q));

    for (int p = 0; p <= j; ++p)
        for (const MultiPoly& lin : j_ideal(ring, G.at(p)))
            P.fam_linear.push_back(lin * var_poly(ring, p));

    for (int p = 0; p <= j; ++p) {
        IndexSet S = G.at(p);
        for (IndexSet T : detail::weak_overlap_partners(G.n(), S)) {
            int upos = G.position(S | T);
            if (upos < 0 || upos > j - 1) continue;
            MultiPoly u;
            for (int l = 0; l <= upos; ++l)
                if (T.subset_of(G.at(l))) u = u + var_poly(ring, l);
            P.fam_weak.push_back(var_poly(ring, p) * detail::diagonal_at(ring, base, T, u));
        }
    }

    for (int p = 0; p <= j; ++p) {
        IndexSet S = G.at(p);
        MultiPoly u;
        for (int l = 0; l <= j; ++l)
            if (S.subset_of(G.at(l))) u = u + var_poly(ring, l);
        P.fam_chern.push_back(detail::diagonal_at(ring, base, S, u));
    }

    return P;
}

/// Generators cutting out the k-th center inside the j-th blowup (k > j):
/// the linear differences of I_k, the divisor variables of earlier members
/// overlapping I_k, and the weak-overlap diagonal relations whose union has
/// already been blown up.  Polynomials live in the stage-j ring.
inline std::vector<MultiPoly> center_kernel(const CellularBase& base, const OrderedBuildingSet& G,
                                            int j, int k) {
    const int g = static_cast<int>(G.size());
    if (j < 0 || j >= g)
        throw InputError("stage index " + std::to_string(j) + " out of range [0, " +
                         std::to_string(g) + ")");
    if (k <= j || k >= g)
        throw InputError("center index " + std::to_string(k) + " must lie in (" +
                         std::to_string(j) + ", " + std::to_string(g) + ")");
    std::vector<IndexSet> dsets(G.elements().begin(), G.elements().begin() + j + 1);
    Ring ring(G.n(), base.m, std::move(dsets));
    IndexSet S = G.at(k);

    std::vector<MultiPoly> gens = j_ideal(ring, S);
    for (int p = 0; p <= j; ++p)
        if (overlaps(G.at(p), S)) gens.push_back(var_poly(ring, p));
    for (IndexSet T : detail::weak_overlap_partners(G.n(), S)) {
        int upos = G.position(S | T);
        if (upos < 0 || upos > j) continue;
        MultiPoly u;
        for (int l = 0; l <= upos; ++l)
            if (T.subset_of(G.at(l))) u = u + var_poly(ring, l);
        gens.push_back(detail::diagonal_at(ring, base, T, u));
    }
    return gens;
}

} // namespace wfm
