#include <catch2/catch_amalgamated.hpp>

#include "wfm/chern.hpp"

using namespace wfm;

namespace {

struct Setup {
    CellularBase base;
    Ring ring;
};

Setup setup(int m, int n) { return {projective_space(m), Ring(n, m, {})}; }

} // namespace

TEST_CASE("pair polynomial on the line", "[chern]") {
    auto [base, R] = setup(1, 2);
    ChernPoly c = chern_poly_pair(R, base, 1, 2);
    REQUIRE(c.t_degree() == 1);
    REQUIRE(c.coeff[0] == hpow(R, 1, 1) + hpow(R, 2, 1));
    REQUIRE(c.coeff[1] == const_poly(R, Rat(-1)));
    REQUIRE_THROWS_AS(chern_poly_pair(R, base, 2, 2), InputError);
}

TEST_CASE("pair polynomial on the plane", "[chern]") {
    auto [base, R] = setup(2, 2);
    ChernPoly c = chern_poly_pair(R, base, 1, 2);
    REQUIRE(c.t_degree() == 2);
    REQUIRE(c.coeff[0] == hpow(R, 1, 2) + hpow(R, 1, 1) * hpow(R, 2, 1) + hpow(R, 2, 2));
    REQUIRE(c.coeff[1] == hpow(R, 1, 1).scaled(Rat(-3)));
    REQUIRE(c.coeff[2] == const_poly(R, Rat(1)));
    // Chern grading: deg coeff[i] + i == m throughout.
    for (int i = 0; i <= 2; ++i)
        REQUIRE(c.coeff[static_cast<std::size_t>(i)].degree() == 2 - i);
}

TEST_CASE("diagonal polynomial is monic of the right t-degree", "[chern]") {
    for (int m : {1, 2}) {
        auto [base, R] = setup(m, 4);
        for (IndexSet S : {IndexSet{1, 2}, IndexSet{2, 4}, IndexSet{1, 2, 3}, IndexSet{1, 2, 3, 4}}) {
            ChernPoly P = chern_poly_diagonal(R, base, S);
            REQUIRE(P.t_degree() == m * (S.size() - 1));
            REQUIRE(P.coeff.back() == const_poly(R, Rat(1)));
            for (int i = 0; i <= P.t_degree(); ++i) {
                const MultiPoly& c = P.coeff[static_cast<std::size_t>(i)];
                if (!c.is_zero()) {
                    REQUIRE(c.homogeneous());
                    REQUIRE(c.degree() == P.t_degree() - i);
                }
            }
        }
    }
    auto [base, R] = setup(1, 3);
    REQUIRE_THROWS_AS(chern_poly_diagonal(R, base, IndexSet{2}), InputError);
}

TEST_CASE("triple diagonal constant term on the line", "[chern]") {
    auto [base, R] = setup(1, 3);
    ChernPoly P = chern_poly_diagonal(R, base, IndexSet{1, 2, 3});
    // P(0) = (h1+h2)(h2+h3), the product of the consecutive diagonals.
    MultiPoly want = (hpow(R, 1, 1) + hpow(R, 2, 1)) * (hpow(R, 2, 1) + hpow(R, 3, 1));
    REQUIRE(P.coeff[0] == want);
    // P(t) = (t + h1 + h2)(t + h2 + h3): check the t coefficient too.
    REQUIRE(P.coeff[1] == hpow(R, 1, 1) + hpow(R, 2, 1).scaled(Rat(2)) + hpow(R, 3, 1));
    REQUIRE(P.coeff[2] == const_poly(R, Rat(1)));
}

TEST_CASE("evaluation and shifting", "[chern]") {
    auto [base, R] = setup(1, 2);
    ChernPoly c = chern_poly_pair(R, base, 1, 2); // -t + h1 + h2
    MultiPoly u = hpow(R, 1, 1).scaled(Rat(2));
    REQUIRE(chern_eval(c, u) == hpow(R, 2, 1) - hpow(R, 1, 1));
    REQUIRE(chern_eval(c, MultiPoly{}) == c.coeff[0]);
    REQUIRE_THROWS_AS(chern_eval(c, hpow(R, 1, 2)), InputError);
    REQUIRE_THROWS_AS(chern_eval(c, hpow(R, 1, 1) + const_poly(R, Rat(1))), InputError);

    // Shift: c(t - u) evaluated anywhere matches c at the shifted argument.
    ChernPoly sh = chern_shift(c, u);
    REQUIRE(sh.coeff[1] == c.coeff[1]);
    REQUIRE(sh.coeff[0] == c.coeff[0] + u); // -(t-u)+h1+h2
    MultiPoly w = hpow(R, 2, 1);
    REQUIRE(chern_eval(sh, w) == chern_eval(c, w - u));
    ChernPoly back = chern_shift(sh, -u);
    for (std::size_t i = 0; i < c.coeff.size(); ++i) REQUIRE(back.coeff[i] == c.coeff[i]);
    REQUIRE_THROWS_AS(chern_shift(c, hpow(R, 1, 2)), InputError);
}

TEST_CASE("shift identity in higher degree", "[chern]") {
    auto [base, R] = setup(2, 3);
    ChernPoly P = chern_poly_diagonal(R, base, IndexSet{1, 2, 3});
    MultiPoly u = hpow(R, 3, 1) - hpow(R, 1, 1).scaled(Rat(3));
    ChernPoly sh = chern_shift(P, u);
    for (const MultiPoly& w : {hpow(R, 2, 1), MultiPoly{}, u})
        REQUIRE(chern_eval(sh, w) == chern_eval(P, w - u));
}

TEST_CASE("negating t flips odd coefficients", "[chern]") {
    auto [base, R] = setup(2, 2);
    ChernPoly c = chern_poly_pair(R, base, 1, 2);
    ChernPoly n = chern_negate_t(c);
    REQUIRE(n.coeff[0] == c.coeff[0]);
    REQUIRE(n.coeff[1] == -c.coeff[1]);
    REQUIRE(n.coeff[2] == c.coeff[2]);
}

TEST_CASE("divisor linear relations", "[chern]") {
    Ring R(4, 1, {});
    auto J = j_ideal(R, IndexSet{1, 3, 4});
    REQUIRE(J.size() == 2);
    REQUIRE(J[0] == hpow(R, 1, 1) - hpow(R, 3, 1));
    REQUIRE(J[1] == hpow(R, 3, 1) - hpow(R, 4, 1));
    REQUIRE_THROWS_AS(j_ideal(R, IndexSet{2}), InputError);
}
