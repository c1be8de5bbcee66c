#include <catch2/catch_amalgamated.hpp>

#include "wfm/morphisms.hpp"
#include "wfm/sampling.hpp"

using namespace wfm;

TEST_CASE("reduction centers are the building-set difference in source order", "[morphisms]") {
    auto A = parse_weights("1,1,1");
    auto B = parse_weights("1/2,1/2,1/2");
    auto red = reduction_centers(A, B);
    CHECK(red.extra_centers == std::vector<IndexSet>{{1, 2}, {1, 3}, {2, 3}});

    CHECK(reduction_centers(A, A).extra_centers.empty());

    // under B = (1/3,...) only the quadruple survives; everything else is extra
    auto A4 = parse_weights("1,1,1,1");
    auto B4 = parse_weights("1/3,1/3,1/3,1/3");
    auto red4 = reduction_centers(A4, B4);
    CHECK(red4.extra_centers ==
          std::vector<IndexSet>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                                {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

    CHECK_THROWS_AS(reduction_centers(A, parse_weights("1,1")), InputError);
    CHECK_THROWS_AS(reduction_centers(parse_weights("1/2,1/2,1/2"), A), InputError);
}

TEST_CASE("extra centers glue disjointly onto the target building set", "[morphisms]") {
    Sampler rng(1001);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.uniform(2, 8);
        WeightVector A = rng.weights(n);
        WeightVector B = rng.dominated(A);
        auto red = reduction_centers(A, B);
        OrderedBuildingSet GA = building_set(A), GB = building_set(B);
        CHECK(red.extra_centers.size() + GB.size() == GA.size());
        for (IndexSet S : red.extra_centers) {
            CHECK(GA.member(S));
            CHECK_FALSE(GB.member(S));
        }
        for (IndexSet S : GB.elements()) CHECK(GA.member(S));
    }
}

TEST_CASE("reduction composition law", "[morphisms]") {
    CHECK(composition_check(parse_weights("1,1,1"), parse_weights("2/3,2/3,2/3"),
                            parse_weights("1/3,1/3,1/3")));
    auto A = parse_weights("1,1/2,1");
    CHECK(composition_check(A, A, A));

    Sampler rng(77);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.uniform(2, 8);
        WeightVector A3 = rng.weights(n);
        WeightVector B3 = rng.dominated(A3);
        WeightVector C3 = rng.dominated(B3);
        CHECK(composition_check(A3, B3, C3));
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("forgetful data restricts and relabels", "[morphisms]") {
    auto A = parse_weights("1,1,1");
    auto fd = forgetful_data(A, IndexSet{1, 2});
    CHECK(fd.target_weights.n() == 2);
    CHECK(fd.target_building_set.elements() == std::vector<IndexSet>{{1, 2}});

    auto none = forgetful_data(parse_weights("1/2,1/2,1/2"), IndexSet{1, 2});
    CHECK(none.target_building_set.empty());

    auto all = forgetful_data(A, IndexSet::full(3));
    CHECK(all.target_building_set == building_set(A));

    CHECK_THROWS_AS(forgetful_data(A, IndexSet{}), InputError);
    CHECK_THROWS_AS(forgetful_data(A, IndexSet{4}), InputError);

    // relabeling is the order isomorphism kept -> {1..r}
    auto mixed = parse_weights("1,1/3,1,1/3,1");
    auto keep = IndexSet{1, 3, 5}; // all weight 1
    auto fd2 = forgetful_data(mixed, keep);
    CHECK(fd2.target_building_set.elements() ==
          std::vector<IndexSet>{{1, 2, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("forgetful with kept = N is the identity", "[morphisms]") {
    Sampler rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.uniform(2, 7);
        WeightVector A = rng.weights(n);
        CHECK(forgetful_data(A, IndexSet::full(n)).target_building_set == building_set(A));
    }
}

TEST_CASE("uniform k-stable weights", "[morphisms]") {
    auto w = mustata_weights(5, 2);
    CHECK(w.w == std::vector<Rat>(5, Rat(1) / 3));
    CHECK_THROWS_AS(mustata_weights(4, 4), InputError);
    CHECK_THROWS_AS(mustata_weights(4, -1), InputError);
    CHECK_THROWS_AS(mustata_weights(4, 5), InputError);

    // the induced building set keeps exactly the sets larger than n-k
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            OrderedBuildingSet G = building_set(mustata_weights(n, k));
            std::vector<IndexSet> expect;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                IndexSet S = IndexSet::from_mask(mask);
                if (S.size() > n - k) expect.push_back(S);
            }
            std::sort(expect.begin(), expect.end(), dim_order_less);
            CHECK(G.elements() == expect);
        }

    // k = 0 gives weight sum exactly 1 on N: empty building set
    CHECK(building_set(mustata_weights(4, 0)).empty());
}
