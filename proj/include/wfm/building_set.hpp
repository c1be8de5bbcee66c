#pragma once

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"
#include "rational.hpp"

namespace wfm {

/// Weight data A = (a_1,...,a_n), each a_i an exact rational in (0,1].
struct WeightVector {
    std::vector<Rat> w;

    int n() const { return static_cast<int>(w.size()); }
    const Rat& of(int label) const { return w.at(static_cast<std::size_t>(label - 1)); }
    friend bool operator==(const WeightVector&, const WeightVector&) = default;

    std::string str() const { return format_rational_list(w); }
};

inline WeightVector make_weights(std::vector<Rat> w) {
    if (w.empty()) throw InputError("weight vector must have n >= 1 entries");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!(w[i] > 0 && w[i] <= 1))
            throw InputError("weight a_" + std::to_string(i + 1) + " = " + rat_str(w[i]) +
                             " violates the constraint 0 < a_i <= 1");
    return WeightVector{std::move(w)};
}

inline WeightVector parse_weights(std::string_view csv) {
    std::vector<Rat> vals;
    try {
        vals = parse_rational_list(csv);
    } catch (const InputError& e) {
        throw InputError(std::string(e.what()) + "; weights must be exact rationals in (0,1]");
    }
    return make_weights(std::move(vals));
}

inline WeightVector parse_weights(int n, std::string_view csv) {
    WeightVector A = parse_weights(csv);
    if (n != 0 && A.n() != n)
        throw InputError("expected " + std::to_string(n) + " weights, got " +
                         std::to_string(A.n()));
    return A;
}

inline Rat weight_sum(const WeightVector& A, IndexSet S) {
    Rat s = 0;
    for (int a : S.members()) {
        if (a > A.n()) throw InputError("label " + std::to_string(a) + " exceeds n");
        s += A.of(a);
    }
    return s;
}

/// S and T overlap: nonempty intersection, neither contained in the other.
inline bool overlaps(IndexSet S, IndexSet T) {
    return !(S & T).empty() && !S.subset_of(T) && !T.subset_of(S);
}

/// Weak overlap: the intersection is a singleton (for |S|,|T| >= 2 this
/// forces an overlap).
inline bool weak_overlap(IndexSet S, IndexSet T) { return (S & T).size() == 1; }

inline bool disjoint_or_nested(IndexSet S, IndexSet T) { return !overlaps(S, T); }

/// Ascending dimension order on index sets: strictly decreasing cardinality
/// (larger sets = smaller diagonals first), ties lexicographic on members.
inline bool dim_order_less(IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
}

/// The ordered building set G_A.  The element list may use any admissible
/// order, i.e. one that refines reverse inclusion (S strictly contains T
/// implies S comes first); the constructor enforces this together with the
/// membership rule so downstream blowup walks are always valid.
class OrderedBuildingSet {
public:
    OrderedBuildingSet() = default;

    OrderedBuildingSet(WeightVector A, std::vector<IndexSet> elements)
        : A_(std::move(A)), elems_(std::move(elements)) {
        const int n = A_.n();
        for (std::size_t p = 0; p < elems_.size(); ++p) {
            IndexSet S = elems_[p];
            if (S.size() < 2 || S.max_label() > n)
                throw InputError("building-set element " + S.to_string() + " is inadmissible");
            if (!(weight_sum(A_, S) > 1))
                throw InputError("element " + S.to_string() + " has weight sum <= 1");
            if (!pos_.emplace(S.mask(), static_cast<int>(p)).second)
                throw InputError("duplicate element " + S.to_string());
        }
        for (std::size_t p = 0; p < elems_.size(); ++p)
            for (std::size_t q = p + 1; q < elems_.size(); ++q)
                if (elems_[p] != elems_[q] && elems_[p].subset_of(elems_[q]))
                    throw InputError("order violates reverse inclusion: " + elems_[q].to_string() +
                                     " must precede " + elems_[p].to_string());
        // Completeness: the list must exhaust the building set (recount is a
        // full 2^n sweep, cheap at the supported n).
        std::size_t expected = count_members(A_);
        if (expected != elems_.size())
            throw InputError("element list does not exhaust the building set");
    }

    int n() const { return A_.n(); }
    const WeightVector& weights() const { return A_; }
    const std::vector<IndexSet>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    IndexSet at(int p) const { return elems_.at(static_cast<std::size_t>(p)); }

    bool member(IndexSet S) const { return pos_.count(S.mask()) != 0; }

    /// Position in the order, or -1 when absent.
    int position(IndexSet S) const {
        auto it = pos_.find(S.mask());
        return it == pos_.end() ? -1 : it->second;
    }

    friend bool operator==(const OrderedBuildingSet& a, const OrderedBuildingSet& b) {
        return a.A_ == b.A_ && a.elems_ == b.elems_;
    }

private:
    static std::size_t count_members(const WeightVector& A) {
        const int n = A.n();
        if (n > 20) throw InputError("building-set enumeration supports n <= 20");
        std::size_t cnt = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            IndexSet S = IndexSet::from_mask(mask);
            if (S.size() >= 2 && weight_sum(A, S) > 1) ++cnt;
        }
        return cnt;
    }

    WeightVector A_;
    std::vector<IndexSet> elems_;
    std::unordered_map<std::uint64_t, int> pos_;
};

/// G_A = { S : |S| >= 2, sum of weights over S > 1 } in the canonical
/// ascending dimension order.
inline OrderedBuildingSet building_set(const WeightVector& A) {
    const int n = A.n();
    if (n > 20) throw InputError("building-set enumeration supports n <= 20");
    std::vector<IndexSet> elems;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        IndexSet S = IndexSet::from_mask(mask);
        if (S.size() >= 2 && weight_sum(A, S) > 1) elems.push_back(S);
    }
    std::sort(elems.begin(), elems.end(), dim_order_less);
    return OrderedBuildingSet(A, std::move(elems));
}

/// Same underlying set, new admissible order.
inline OrderedBuildingSet reorder(const OrderedBuildingSet& G, std::vector<IndexSet> order) {
    if (order.size() != G.size())
        throw InputError("reorder: element count mismatch");
    for (IndexSet S : order)
        if (!G.member(S)) throw InputError("reorder: " + S.to_string() + " is not an element");
    return OrderedBuildingSet(G.weights(), std::move(order));
}

/// The iterated-fibration order: for l = 2..n and cardinality s = l down
/// to 2, all S with max(S) = l and |S| = s, lexicographically; non-members
/// deleted.  Every prefix is again a building set, but the order does not
/// refine reverse inclusion, so the result is a plain list.
inline std::vector<IndexSet> fm_order(const OrderedBuildingSet& G) {
    const int n = G.n();
    std::vector<IndexSet> out;
    out.reserve(G.size());
    for (int l = 2; l <= n; ++l) {
        for (int s = l; s >= 2; --s) {
            // subsets of {1..l-1} of size s-1 in lexicographic order, plus l
            std::vector<int> c(static_cast<std::size_t>(s - 1));
            for (int i = 0; i < s - 1; ++i) c[static_cast<std::size_t>(i)] = i + 1;
            while (true) {
                IndexSet S = IndexSet::single(l);
                for (int a : c) S = S.with(a);
                if (G.member(S)) out.push_back(S);
                // next (s-1)-combination of {1..l-1}
                int i = s - 2;
                while (i >= 0 && c[static_cast<std::size_t>(i)] == l - 1 - (s - 2 - i)) --i;
                if (i < 0) break;
                ++c[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < s - 1; ++j)
                    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return out;
}

} // namespace wfm
