#include <catch2/catch_amalgamated.hpp>

#include "wfm/poly.hpp"
#include "wfm/sampling.hpp"

using namespace wfm;

namespace {

Ring demo_ring() {
    return Ring(3, 1, {IndexSet{1, 2, 3}, IndexSet{1, 2}});
}

Expo ex(std::initializer_list<int> e) {
    Expo out;
    for (int x : e) out.push_back(static_cast<std::uint8_t>(x));
    return out;
}

} // namespace

TEST_CASE("ring variable layout: divisors first, then h block", "[poly]") {
    Ring R = demo_ring();
    REQUIRE(R.nvars() == 5);
    REQUIRE(R.nd() == 2);
    REQUIRE(R.var_name(0) == "D_123");
    REQUIRE(R.var_name(1) == "D_12");
    REQUIRE(R.var_name(2) == "h1");
    REQUIRE(R.var_name(4) == "h3");
    REQUIRE(R.dvar(IndexSet{1, 2}) == 1);
    REQUIRE(R.dvar(IndexSet{1, 3}) == -1);
    REQUIRE(R.hvar(1) == 2);
    REQUIRE(R.hvar(3) == 4);
    REQUIRE_THROWS_AS(R.hvar(4), InputError);
    REQUIRE_THROWS_AS(R.var_name(5), InputError);
}

TEST_CASE("graded reverse lexicographic order", "[poly]") {
    // Degree dominates.
    REQUIRE(drl_less(ex({1, 0, 0}), ex({1, 1, 0})));
    // Classic check in three variables x,y,z: x^2 z < x y^2.
    REQUIRE(drl_less(ex({2, 0, 1}), ex({1, 2, 0})));
    REQUIRE_FALSE(drl_less(ex({1, 2, 0}), ex({2, 0, 1})));
    // Variables rank x > y > z.
    REQUIRE(drl_less(ex({0, 0, 1}), ex({0, 1, 0})));
    REQUIRE(drl_less(ex({0, 1, 0}), ex({1, 0, 0})));
    REQUIRE_FALSE(drl_less(ex({1, 0, 0}), ex({1, 0, 0})));
}

TEST_CASE("monomial arithmetic", "[poly]") {
    REQUIRE(mono_mul(ex({1, 2}), ex({0, 3})) == ex({1, 5}));
    REQUIRE(mono_quot(ex({1, 5}), ex({0, 3})) == ex({1, 2}));
    REQUIRE(mono_lcm(ex({1, 2}), ex({0, 3})) == ex({1, 3}));
    REQUIRE(mono_divides(ex({1, 2}), ex({1, 5})));
    REQUIRE_FALSE(mono_divides(ex({2, 2}), ex({1, 5})));
    REQUIRE(total_degree(ex({1, 2, 3})) == 6);
}

TEST_CASE("from_terms canonicalizes", "[poly]") {
    Ring R = demo_ring();
    MultiPoly p = MultiPoly::from_terms({{ex({0, 0, 1, 0, 0}), Rat(2)},
                                         {ex({0, 0, 0, 1, 0}), Rat(1)},
                                         {ex({0, 0, 1, 0, 0}), Rat(-2)}});
    REQUIRE(p.term_count() == 1);
    REQUIRE(p == hpow(R, 2, 1));
    REQUIRE(MultiPoly::from_terms({}).is_zero());
    REQUIRE((hpow(R, 1, 1) - hpow(R, 1, 1)).is_zero());
}

TEST_CASE("arithmetic identities on sampled polynomials", "[poly]") {
    Ring R = demo_ring();
    Sampler rng(915);
    auto sample = [&] {
        std::vector<MultiPoly::Term> terms;
        int k = rng.uniform(1, 5);
        for (int t = 0; t < k; ++t) {
            Expo e(5, 0);
            for (int v = 0; v < 5; ++v) e[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>(rng.uniform(0, 2));
            terms.emplace_back(std::move(e), Rat(rng.uniform(-4, 4)));
        }
        return MultiPoly::from_terms(std::move(terms));
    };
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly f = sample(), g = sample(), h = sample();
        REQUIRE((f + g) * h == f * h + g * h);
        REQUIRE(f * g == g * f);
        REQUIRE((f - g) + g == f);
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f.scaled(Rat(-3)) == f.scaled(Rat(-1)).scaled(Rat(3)));
        if (!f.is_zero()) {
            REQUIRE(f.times_monomial(ex({1, 0, 0, 0, 0}), Rat(2)) ==
                    f * var_poly(R, 0, 1, Rat(2)));
        }
    }
}

TEST_CASE("leading data and homogeneity", "[poly]") {
    Ring R = demo_ring();
    MultiPoly p = hpow(R, 1, 2) + var_poly(R, 0) * hpow(R, 2, 1);
    REQUIRE(p.degree() == 2);
    REQUIRE(p.homogeneous());
    // Revlex ties break from the bottom variable, so h1^2 beats D_123*h2
    // even though D ranks above every h among the degree-one monomials.
    REQUIRE(p.lm() == ex({0, 0, 2, 0, 0}));
    REQUIRE(drl_less(ex({0, 1, 0, 0, 0}), ex({1, 0, 0, 0, 0}))); // D_12 < D_123
    REQUIRE(drl_less(ex({0, 0, 1, 0, 0}), ex({0, 1, 0, 0, 0}))); // h1 < D_12
    MultiPoly q = p + hpow(R, 1, 1);
    REQUIRE_FALSE(q.homogeneous());
    REQUIRE(pow(hpow(R, 1, 1) + hpow(R, 2, 1), 2) ==
            hpow(R, 1, 2) + hpow(R, 2, 2) +
                MultiPoly::from_terms({{ex({0, 0, 1, 1, 0}), Rat(2)}}));
}

TEST_CASE("polynomial rendering", "[poly]") {
    Ring R = demo_ring();
    REQUIRE(poly_str(R, MultiPoly{}) == "0");
    MultiPoly p = var_poly(R, 1).scaled(Rat(-1)) + hpow(R, 1, 1) + hpow(R, 2, 1);
    REQUIRE(poly_str(R, p) == "-D_12 + h1 + h2");
    MultiPoly q = hpow(R, 3, 2, Rat(1, 2)) - const_poly(R, Rat(7));
    REQUIRE(poly_str(R, q) == "1/2*h3^2 - 7");
    MultiPoly c = var_poly(R, 0, 3) * hpow(R, 1, 1);
    REQUIRE(poly_str(R, c) == "D_123^3*h1");
}
