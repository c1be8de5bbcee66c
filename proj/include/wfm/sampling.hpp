#pragma once

#include <random>
#include <vector>

#include "building_set.hpp"
#include "index_set.hpp"
#include "rational.hpp"

namespace wfm {

/// Seeded, fully reproducible sampling for the randomized suites.  Mapping
/// from raw engine output is hand-rolled so results depend only on the seed,
/// not on a standard library's distribution implementation.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Exact rational in (0,1]: p/q with 1 <= p <= q <= max_den.
    Rat weight(int max_den = 10) {
        int q = uniform(1, max_den);
        int p = uniform(1, q);
        return Rat(p) / q;
    }

    WeightVector weights(int n, int max_den = 10) {
        std::vector<Rat> w;
        w.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w.push_back(weight(max_den));
        return WeightVector{std::move(w)};
    }

    /// Componentwise 0 < b_i <= a_i, exact.
    WeightVector dominated(const WeightVector& A, int max_den = 6) {
        std::vector<Rat> w;
        w.reserve(static_cast<std::size_t>(A.n()));
        for (const Rat& a : A.w) {
            int q = uniform(1, max_den);
            int p = uniform(1, q);
            w.push_back(a * p / q);
        }
        return WeightVector{std::move(w)};
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(raw() % i);
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Random admissible order: shuffle inside each equal-cardinality block
    /// of the canonical order.  Cardinality-monotone orders refine reverse
    /// inclusion and keep every prefix a building set (the union of an
    /// overlapping pair is strictly larger, hence in an earlier block).
    std::vector<IndexSet> admissible_order(const OrderedBuildingSet& G) {
        std::vector<IndexSet> order = G.elements();
        std::sort(order.begin(), order.end(), dim_order_less);
        std::size_t lo = 0;
        while (lo < order.size()) {
            std::size_t hi = lo;
            while (hi < order.size() && order[hi].size() == order[lo].size()) ++hi;
            std::vector<IndexSet> block(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                        order.begin() + static_cast<std::ptrdiff_t>(hi));
            shuffle(block);
            std::copy(block.begin(), block.end(), order.begin() + static_cast<std::ptrdiff_t>(lo));
            lo = hi;
        }
        return order;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace wfm
