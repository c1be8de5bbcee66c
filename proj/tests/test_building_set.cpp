#include <catch2/catch_amalgamated.hpp>

#include "wfm/building_set.hpp"
#include "wfm/sampling.hpp"

using namespace wfm;

namespace {
std::vector<IndexSet> sets(std::initializer_list<IndexSet> l) { return {l}; }
} // namespace

TEST_CASE("weight vectors validate (0,1] exactly", "[building_set]") {
    CHECK(parse_weights("1,1,1/2,2/3").n() == 4);
    CHECK_THROWS_AS(parse_weights("0,1"), InputError);
    CHECK_THROWS_AS(parse_weights("3/2,1"), InputError);
    CHECK_THROWS_AS(parse_weights("1.5,1"), InputError);
    CHECK_THROWS_AS(parse_weights(""), InputError);
    CHECK_THROWS_AS(parse_weights(3, "1,1"), InputError);
    CHECK(parse_weights(0, "1,1").n() == 2); // n inferred
}

TEST_CASE("building set members and canonical order", "[building_set]") {
    OrderedBuildingSet G = building_set(parse_weights("1,1,1"));
    CHECK(G.elements() == sets({IndexSet{1, 2, 3}, IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{2, 3}}));
    CHECK(G.position(IndexSet{1, 3}) == 2);
    CHECK(G.position(IndexSet{1, 4}) == -1);

    // boundary: pair sums exactly 1 are excluded by the strict inequality
    OrderedBuildingSet H = building_set(parse_weights("1/2,1/2,1/2"));
    CHECK(H.elements() == sets({IndexSet{1, 2, 3}}));

    // total weight <= 1: nothing to blow up
    CHECK(building_set(parse_weights("1/8,1/8,1/8,1/8")).empty());
}

TEST_CASE("upward closure and order refinement hold for random weights", "[building_set]") {
    Sampler rng(20260819);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(2, 7);
        WeightVector A = rng.weights(n);
        OrderedBuildingSet G = building_set(A);
        for (IndexSet S : G.elements())
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                IndexSet T = IndexSet::from_mask(mask);
                if (S.subset_of(T)) CHECK(G.member(T));
            }
        const auto& e = G.elements();
        for (std::size_t p = 0; p < e.size(); ++p)
            for (std::size_t q = p + 1; q < e.size(); ++q) {
                CHECK_FALSE(e[p].subset_of(e[q])); // superset must come first
                bool desc = e[p].size() > e[q].size() ||
                            (e[p].size() == e[q].size() && lex_less(e[p], e[q]));
                CHECK(desc);
            }
    }
}

TEST_CASE("overlap predicates", "[building_set]") {
    CHECK(overlaps(IndexSet{1, 2}, IndexSet{2, 3}));
    CHECK_FALSE(overlaps(IndexSet{1, 2}, IndexSet{1, 2, 3}));
    CHECK_FALSE(overlaps(IndexSet{1, 2}, IndexSet{3, 4}));
    CHECK_FALSE(overlaps(IndexSet{1, 2}, IndexSet{1, 2}));

    CHECK(weak_overlap(IndexSet{1, 2}, IndexSet{2, 3}));
    CHECK_FALSE(weak_overlap(IndexSet{1, 2, 3}, IndexSet{2, 3, 4}));
    CHECK(weak_overlap(IndexSet{1, 2, 3}, IndexSet{3, 4}));
}

TEST_CASE("pair trichotomy", "[building_set]") {
    Sampler rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.uniform(2, 8);
        auto pick = [&] {
            IndexSet S;
            while (S.size() < 2) S = IndexSet::from_mask(rng.raw() & ((1u << n) - 1));
            return S;
        };
        IndexSet S = pick(), T = pick();
        bool disjoint = (S & T).empty();
        bool nested = S.subset_of(T) || T.subset_of(S);
        bool over = overlaps(S, T);
        CHECK((disjoint ? 1 : 0) + (nested ? 1 : 0) + (over ? 1 : 0) == 1);
        if (weak_overlap(S, T) && (S | T).size() > std::max(S.size(), T.size()))
            CHECK(overlaps(S, T));
    }
}

TEST_CASE("fm order lists diagonals by largest label, then descending size", "[building_set]") {
    OrderedBuildingSet G3 = building_set(parse_weights("1,1,1"));
    CHECK(fm_order(G3) == sets({IndexSet{1, 2}, IndexSet{1, 2, 3}, IndexSet{1, 3}, IndexSet{2, 3}}));

    CHECK(fm_order(building_set(parse_weights("1/2,1/2,1/2"))) == sets({IndexSet{1, 2, 3}}));

    OrderedBuildingSet G4 = building_set(parse_weights("1,1,1,1"));
    CHECK(fm_order(G4) ==
          sets({IndexSet{1, 2}, IndexSet{1, 2, 3}, IndexSet{1, 3}, IndexSet{2, 3},
                IndexSet{1, 2, 3, 4}, IndexSet{1, 2, 4}, IndexSet{1, 3, 4}, IndexSet{2, 3, 4},
                IndexSet{1, 4}, IndexSet{2, 4}, IndexSet{3, 4}}));

    // same underlying set for arbitrary weights
    Sampler rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        OrderedBuildingSet G = building_set(rng.weights(rng.uniform(2, 7)));
        auto fm = fm_order(G);
        CHECK(fm.size() == G.size());
        for (IndexSet S : fm) CHECK(G.member(S));
    }
}

TEST_CASE("reorder validates admissibility", "[building_set]") {
    OrderedBuildingSet G = building_set(parse_weights("1,1,1"));
    // swapping the pairs is fine...
    auto ok = sets({IndexSet{1, 2, 3}, IndexSet{2, 3}, IndexSet{1, 3}, IndexSet{1, 2}});
    CHECK(reorder(G, ok).elements() == ok);
    // ...but a pair before the triple violates reverse inclusion
    auto bad = sets({IndexSet{1, 2}, IndexSet{1, 2, 3}, IndexSet{1, 3}, IndexSet{2, 3}});
    CHECK_THROWS_AS(reorder(G, bad), InputError);
    // and dropping an element is caught
    auto partial = sets({IndexSet{1, 2, 3}, IndexSet{1, 2}, IndexSet{1, 3}});
    CHECK_THROWS_AS(reorder(G, partial), InputError);
}

TEST_CASE("sampled admissible orders pass validation", "[building_set]") {
    Sampler rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        OrderedBuildingSet G = building_set(rng.weights(rng.uniform(2, 6)));
        if (G.empty()) continue;
        auto order = rng.admissible_order(G);
        CHECK_NOTHROW(reorder(G, order));
    }
}
