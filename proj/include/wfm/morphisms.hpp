#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "building_set.hpp"
#include "errors.hpp"
#include "index_set.hpp"

namespace wfm {

/// Data of the reduction morphism X_A[n] -> X_B[n]: it is the blowup along
/// the centers in G_A \ G_B, listed in G_A's order.
struct ReductionData {
    WeightVector source_weights; // A
    WeightVector target_weights; // B <= A componentwise
    std::vector<IndexSet> extra_centers;
};

inline ReductionData reduction_centers(const WeightVector& A, const WeightVector& B) {
    if (A.n() != B.n()) throw InputError("reduction: weight vectors differ in length");
    for (int i = 1; i <= A.n(); ++i)
        if (!(B.of(i) <= A.of(i)))
            throw InputError("reduction: target weight b_" + std::to_string(i) +
                             " exceeds source weight");
    OrderedBuildingSet GA = building_set(A);
    OrderedBuildingSet GB = building_set(B);
    std::vector<IndexSet> extra;
    for (IndexSet S : GA.elements())
        if (!GB.member(S)) extra.push_back(S);
    return ReductionData{A, B, std::move(extra)};
}

/// Composition law of reductions: G_A \ G_C must be the disjoint union of
/// G_A \ G_B and G_B \ G_C.
inline bool composition_check(const WeightVector& A, const WeightVector& B,
                              const WeightVector& C) {
    ReductionData ab = reduction_centers(A, B);
    ReductionData bc = reduction_centers(B, C);
    ReductionData ac = reduction_centers(A, C);
    std::vector<IndexSet> glued = ab.extra_centers;
    for (IndexSet S : bc.extra_centers) {
        if (std::find(glued.begin(), glued.end(), S) != glued.end()) return false; // not disjoint
        glued.push_back(S);
    }
    auto key = [](std::vector<IndexSet> v) {
        std::vector<std::uint64_t> k;
        k.reserve(v.size());
        for (IndexSet S : v) k.push_back(S.mask());
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(std::move(glued)) == key(ac.extra_centers);
}

/// Data of the forgetful morphism X_A[n] -> X_{A'}[r] that keeps the labeled
/// points in `kept`: the target building set lives on the relabeled points
/// {1..r} via the order isomorphism kept -> {1..r}.
struct ForgetfulData {
    WeightVector source_weights;
    IndexSet kept_labels;
    WeightVector target_weights;
    OrderedBuildingSet target_building_set;
};

inline ForgetfulData forgetful_data(const WeightVector& A, IndexSet kept) {
    if (kept.empty()) throw InputError("forgetful: kept label set is empty");
    if (kept.max_label() > A.n())
        throw InputError("forgetful: kept label exceeds n = " + std::to_string(A.n()));
    std::vector<Rat> sub;
    sub.reserve(static_cast<std::size_t>(kept.size()));
    for (int a : kept.members()) sub.push_back(A.of(a));
    WeightVector Ap = make_weights(std::move(sub));
    return ForgetfulData{A, kept, Ap, building_set(Ap)};
}

/// Uniform weights (eps,...,eps) with eps = 1/(n-k), the right endpoint of
/// the admissible interval; the resulting building set is
/// { S : |S| > n-k }, matching the k-stable pointed compactification.
inline WeightVector mustata_weights(int n, int k) {
    if (n < 1) throw InputError("mustata: n must be >= 1");
    if (k < 0 || k > n) throw InputError("mustata: k must satisfy 0 <= k <= n");
    if (k == n) throw InputError("mustata: k = n leaves no admissible epsilon (n-k = 0)");
    Rat eps = Rat(1) / (n - k);
    return WeightVector{std::vector<Rat>(static_cast<std::size_t>(n), eps)};
}

} // namespace wfm
