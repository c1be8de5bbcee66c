#pragma once

#include <vector>

#include "base_geometry.hpp"
#include "building_set.hpp"
#include "errors.hpp"
#include "poly.hpp"

namespace wfm {

/// Polynomial in a formal variable t with ring-element coefficients;
/// coeff[i] multiplies t^i.  Chern-graded: deg(coeff[i]) + i is constant.
struct ChernPoly {
    std::vector<MultiPoly> coeff;

    int t_degree() const { return static_cast<int>(coeff.size()) - 1; }
};

/// c_{a,b}(t): constant term the pulled-back diagonal class in h_a, h_b;
/// the t^i coefficient (-1)^i c_{m-i} of the tangent bundle in h_a.
inline ChernPoly chern_poly_pair(const Ring& ring, const CellularBase& base, int a, int b) {
    if (a == b) throw InputError("chern_poly_pair needs distinct factor labels");
    const int m = base.m;
    ChernPoly P;
    P.coeff.assign(static_cast<std::size_t>(m) + 1, MultiPoly{});
    std::vector<MultiPoly::Term> diag;
    for (const DiagTerm& t : base.diagonal_class) {
        Expo e(static_cast<std::size_t>(ring.nvars()), 0);
        if (t.i) e[static_cast<std::size_t>(ring.hvar(a))] = static_cast<std::uint8_t>(t.i);
        if (t.j) e[static_cast<std::size_t>(ring.hvar(b))] = static_cast<std::uint8_t>(t.j);
        diag.emplace_back(std::move(e), t.coeff);
    }
    P.coeff[0] = MultiPoly::from_terms(std::move(diag));
    for (int i = 1; i <= m; ++i) {
        const UniClass& c = base.tangent_chern[static_cast<std::size_t>(m - i)];
        std::vector<MultiPoly::Term> terms;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            Expo e(static_cast<std::size_t>(ring.nvars()), 0);
            if (j) e[static_cast<std::size_t>(ring.hvar(a))] = static_cast<std::uint8_t>(j);
            terms.emplace_back(std::move(e), (i % 2 ? -c[j] : c[j]));
        }
        P.coeff[static_cast<std::size_t>(i)] = MultiPoly::from_terms(std::move(terms));
    }
    return P;
}

inline ChernPoly chern_mul(const ChernPoly& A, const ChernPoly& B) {
    ChernPoly R;
    R.coeff.assign(A.coeff.size() + B.coeff.size() - 1, MultiPoly{});
    for (std::size_t i = 0; i < A.coeff.size(); ++i)
        for (std::size_t j = 0; j < B.coeff.size(); ++j)
            R.coeff[i + j] = R.coeff[i + j] + A.coeff[i] * B.coeff[j];
    return R;
}

/// P(t) with t replaced by -t.
inline ChernPoly chern_negate_t(const ChernPoly& P) {
    ChernPoly R = P;
    for (std::size_t i = 1; i < R.coeff.size(); i += 2) R.coeff[i] = -R.coeff[i];
    return R;
}

/// P_{Delta_S}(t) = prod over consecutive pairs of S of c_{i_k,i_{k+1}}(-t);
/// monic of t-degree m(|S|-1).
inline ChernPoly chern_poly_diagonal(const Ring& ring, const CellularBase& base, IndexSet S) {
    if (S.size() < 2) throw InputError("diagonal needs at least two factors: " + S.to_string());
    auto mem = S.members();
    ChernPoly R;
    R.coeff = {const_poly(ring, Rat(1))};
    for (std::size_t k = 0; k + 1 < mem.size(); ++k)
        R = chern_mul(R, chern_negate_t(chern_poly_pair(ring, base, mem[k], mem[k + 1])));
    return R;
}

/// P(u) for a ring element u; u must be homogeneous of degree 1 so the
/// Chern grading survives.
inline MultiPoly chern_eval(const ChernPoly& P, const MultiPoly& u) {
    if (!u.is_zero() && !(u.homogeneous() && u.degree() == 1))
        throw InputError("chern_eval: substituted class must be homogeneous of degree 1");
    MultiPoly r = P.coeff[0];
    MultiPoly upow;
    for (std::size_t i = 1; i < P.coeff.size(); ++i) {
        if (u.is_zero()) break;
        upow = i == 1 ? u : upow * u;
        r = r + P.coeff[i] * upow;
    }
    return r;
}

/// P(t - u) expanded back into a ChernPoly, u homogeneous of degree 1.
inline ChernPoly chern_shift(const ChernPoly& P, const MultiPoly& u) {
    if (!u.is_zero() && !(u.homogeneous() && u.degree() == 1))
        throw InputError("chern_shift: substituted class must be homogeneous of degree 1");
    const std::size_t tdeg = P.coeff.size() - 1;
    MultiPoly mu = -u;
    std::vector<MultiPoly> mupow; // mupow[e-1] = (-u)^e
    for (std::size_t e = 1; e <= tdeg; ++e)
        mupow.push_back(e == 1 ? mu : mupow.back() * mu);
    ChernPoly R;
    R.coeff.assign(P.coeff.size(), MultiPoly{});
    for (std::size_t i = 0; i < P.coeff.size(); ++i) {
        // (t - u)^i = sum_k binom(i,k) t^k (-u)^(i-k)
        Rat binom = 1;
        for (std::size_t k = 0; k <= i; ++k) {
            std::size_t e = i - k;
            MultiPoly term = e == 0 ? P.coeff[i] : P.coeff[i] * mupow[e - 1];
            R.coeff[k] = R.coeff[k] + term.scaled(binom);
            binom = binom * Rat(static_cast<int>(i - k)) / Rat(static_cast<int>(k + 1));
        }
    }
    return R;
}

/// The linear relations attached to a divisor D^S: consecutive differences
/// h_{i_k} - h_{i_{k+1}} over the sorted members of S.
inline std::vector<MultiPoly> j_ideal(const Ring& ring, IndexSet S) {
    if (S.size() < 2) throw InputError("j_ideal needs at least two factors: " + S.to_string());
    auto mem = S.members();
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k + 1 < mem.size(); ++k)
        out.push_back(hpow(ring, mem[k], 1) - hpow(ring, mem[k + 1], 1));
    return out;
}

} // namespace wfm
