#pragma once

#include <algorithm>
#include <span>
#include <unordered_set>
#include <vector>

#include "building_set.hpp"
#include "errors.hpp"
#include "index_set.hpp"

namespace wfm {

/// A nest: every member lies in G and every pair is disjoint or nested.
/// The empty collection is a nest (the open stratum).
inline bool is_nest(std::span<const IndexSet> sets, const OrderedBuildingSet& G) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!G.member(sets[i])) return false;
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (overlaps(sets[i], sets[j])) return false;
    }
    return true;
}

/// All nests of G, including the empty one, grouped by nest size and then
/// lexicographic in the positions of their members.  Members of each nest
/// appear in G's order.
inline std::vector<std::vector<IndexSet>> enumerate_nests(const OrderedBuildingSet& G,
                                                          const Caps& caps = {}) {
    const int g = static_cast<int>(G.size());
    if (g > caps.max_enumeration)
        throw ResourceError("nest enumeration refused: |G| = " + std::to_string(g) +
                            " exceeds the cap " + std::to_string(caps.max_enumeration));
    std::vector<std::vector<int>> found;
    std::vector<int> chosen;
    auto extend = [&](auto&& self, int from) -> void {
        found.push_back(chosen);
        for (int p = from; p < g; ++p) {
            bool ok = true;
            for (int q : chosen)
                if (overlaps(G.at(q), G.at(p))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(p);
            self(self, p + 1);
            chosen.pop_back();
        }
    };
    extend(extend, 0);
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<std::vector<IndexSet>> out;
    out.reserve(found.size());
    for (const auto& nest : found) {
        std::vector<IndexSet> sets;
        sets.reserve(nest.size());
        for (int p : nest) sets.push_back(G.at(p));
        out.push_back(std::move(sets));
    }
    return out;
}

/// Factors of a collection: the unions of the connected components of its
/// intersection graph (vertices = sets, edges = nonempty intersection).
/// These are the unique pairwise-disjoint sets with the same total
/// intersection of diagonals; order-independent, returned sorted.
inline std::vector<IndexSet> factor_decomposition(std::span<const IndexSet> sets) {
    std::vector<IndexSet> comps;
    for (IndexSet S : sets) {
        if (S.empty()) throw InputError("factor_decomposition: empty set");
        IndexSet merged = S;
        std::vector<IndexSet> next;
        for (IndexSet C : comps) {
            if (!(C & merged).empty())
                merged = merged | C;
            else
                next.push_back(C);
        }
        next.push_back(merged);
        comps = std::move(next);
    }
    std::sort(comps.begin(), comps.end(), [](IndexSet a, IndexSet b) { return lex_less(a, b); });
    return comps;
}

/// Building-set test for a bare collection: for every pair with nonempty
/// intersection the union must again belong to the collection.  Equivalent
/// to requiring that the union of every connected subcollection is present
/// (induction along a spanning tree), i.e. that all factors of all
/// subcollections lie in the collection.
inline bool collection_is_building_set(std::span<const IndexSet> sets) {
    std::unordered_set<std::uint64_t> have;
    for (IndexSet S : sets) have.insert(S.mask());
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if ((sets[i] & sets[j]).empty()) continue;
            if (!have.count((sets[i] | sets[j]).mask())) return false;
        }
    return true;
}

/// True iff every prefix of the ordered list is a building set.  Incremental
/// pairwise-union criterion; polynomial, no subcollection enumeration.
inline bool prefix_is_building_set(std::span<const IndexSet> ordered) {
    std::unordered_set<std::uint64_t> have;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        have.insert(ordered[i].mask());
        for (std::size_t j = 0; j < i; ++j) {
            if ((ordered[i] & ordered[j]).empty()) continue;
            if (!have.count((ordered[i] | ordered[j]).mask())) return false;
        }
    }
    return true;
}

/// Permutation-checked variant: the order must list exactly G's elements.
inline bool prefix_is_building_set(std::span<const IndexSet> ordered,
                                   const OrderedBuildingSet& G) {
    std::unordered_set<std::uint64_t> seen;
    for (IndexSet S : ordered) {
        if (!G.member(S)) throw InputError("order contains non-element " + S.to_string());
        if (!seen.insert(S.mask()).second)
            throw InputError("order repeats element " + S.to_string());
    }
    if (seen.size() != G.size()) throw InputError("order does not exhaust the building set");
    return prefix_is_building_set(ordered);
}

} // namespace wfm
