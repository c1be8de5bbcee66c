#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace wfm {

/// Clear denominators and divide out integer content; leading coefficient
/// positive.  Values stay rational-typed but are integral afterwards.
inline MultiPoly make_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Int den = 1, num = 0;
    for (const auto& [mono, c] : p.terms()) {
        den = lcm(den, denominator(c));
        num = gcd(num, numerator(c));
    }
    Rat scale = Rat(den) / num; // num != 0: canonical gcd is positive
    if (p.lc() < 0) scale = -scale;
    return p.scaled(scale);
}

/// Grobner basis of a homogeneous ideal, complete through degree `maxdeg`.
/// Reduced: primitive integer generators, positive leading coefficients, no
/// term of any member divisible by another member's leading monomial.
struct ReducedGB {
    Ring ring;
    int maxdeg = 0;
    std::vector<MultiPoly> basis; // sorted by leading monomial, drl-ascending
};

/// Full division remainder of p modulo the (leading terms of the) basis.
/// Deterministic: always cancels the greatest reducible term against the
/// first eligible divisor in basis order.
inline MultiPoly reduce_full(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    MultiPoly rem, work = p;
    while (!work.is_zero()) {
        bool hit = false;
        for (const MultiPoly& g : basis) {
            if (!mono_divides(g.lm(), work.lm())) continue;
            Rat c = work.lc() / g.lc();
            work = MultiPoly::axpy(work, -c, g.times_monomial(mono_quot(work.lm(), g.lm()), Rat(1)));
            hit = true;
            break;
        }
        if (!hit) {
            // leading term is standard; move it to the remainder
            MultiPoly t = MultiPoly::from_terms({{work.lm(), work.lc()}});
            rem = rem + t;
            work = work - t;
        }
    }
    return rem;
}

namespace detail {

struct PairKey {
    int deg;
    Expo lcm;
    int i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (lcm != o.lcm) return drl_less(lcm, o.lcm);
        return std::tie(i, j) < std::tie(o.i, o.j);
    }
};

} // namespace detail

/// Buchberger with the product criterion, processing S-pairs in increasing
/// (lcm degree, lcm, index) order and discarding pairs whose lcm degree
/// exceeds `maxdeg`.  For homogeneous input every S-polynomial is
/// homogeneous of the lcm degree, so the result is a full Grobner basis in
/// degrees <= maxdeg; that is all the quotient-counting below ever reads.
inline ReducedGB groebner_basis(const Ring& ring, const std::vector<MultiPoly>& gens,
                                int maxdeg, const Caps& caps = {}) {
    if (ring.nvars() > caps.max_vars)
        throw ResourceError("variable count " + std::to_string(ring.nvars()) +
                            " exceeds cap " + std::to_string(caps.max_vars));
    if (maxdeg > caps.max_degree)
        throw ResourceError("working degree " + std::to_string(maxdeg) +
                            " exceeds cap " + std::to_string(caps.max_degree));

    std::vector<MultiPoly> basis;
    for (const MultiPoly& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous()) throw InputError("groebner_basis expects homogeneous generators");
        basis.push_back(make_primitive(g));
    }
    std::sort(basis.begin(), basis.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return drl_less(a.lm(), b.lm());
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    std::set<detail::PairKey> pairs;
    auto push_pairs = [&](int jnew) {
        for (int i = 0; i < jnew; ++i) {
            Expo l = mono_lcm(basis[i].lm(), basis[jnew].lm());
            int d = total_degree(l);
            if (d <= maxdeg) pairs.insert({d, std::move(l), i, jnew});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!pairs.empty()) {
        auto key = *pairs.begin();
        pairs.erase(pairs.begin());
        const MultiPoly &f = basis[key.i], &g = basis[key.j];
        if (key.lcm == mono_mul(f.lm(), g.lm())) continue; // disjoint leading supports
        MultiPoly s = MultiPoly::axpy(f.times_monomial(mono_quot(key.lcm, f.lm()), Rat(1) / f.lc()),
                                      Rat(-1),
                                      g.times_monomial(mono_quot(key.lcm, g.lm()), Rat(1) / g.lc()));
        MultiPoly r = reduce_full(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(make_primitive(r));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: drop members whose leading monomial another one divides.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
            redundant = i != j && mono_divides(basis[j].lm(), basis[i].lm()) &&
                        !(basis[j].lm() == basis[i].lm() && j > i);
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each member against the others for the reduced basis.
    std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return drl_less(a.lm(), b.lm());
    });
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(make_primitive(reduce_full(minimal[i], others)));
    }

    return ReducedGB{ring, maxdeg, std::move(reduced)};
}

/// Canonical representative of p in the quotient.  Only trustworthy for
/// deg(p) <= gb.maxdeg.
inline MultiPoly normal_form(const ReducedGB& gb, const MultiPoly& p) {
    if (p.degree() > gb.maxdeg)
        throw InputError("normal_form: degree exceeds the computed basis degree");
    return reduce_full(p, gb.basis);
}

namespace detail {

inline void count_standard(const std::vector<Expo>& lts, const std::vector<int>& purecap,
                           Expo& cur, std::size_t v, int rest, std::vector<long long>& out,
                           int atdeg) {
    if (v + 1 == cur.size()) {
        if (rest >= purecap[v]) return;
        cur[v] = static_cast<std::uint8_t>(rest);
        for (const Expo& l : lts)
            if (mono_divides(l, cur)) {
                cur[v] = 0;
                return;
            }
        ++out[static_cast<std::size_t>(atdeg)];
        cur[v] = 0;
        return;
    }
    int top = std::min(rest, purecap[v] - 1);
    for (int e = 0; e <= top; ++e) {
        cur[v] = static_cast<std::uint8_t>(e);
        count_standard(lts, purecap, cur, v + 1, rest - e, out, atdeg);
    }
    cur[v] = 0;
}

} // namespace detail

/// Dimensions of the graded quotient in degrees 0..topdeg, counted as the
/// standard monomials (those outside the leading-term ideal).
inline std::vector<long long> standard_monomial_counts(const ReducedGB& gb, int topdeg) {
    if (topdeg > gb.maxdeg)
        throw InputError("standard_monomial_counts: degree exceeds the computed basis degree");
    std::vector<Expo> lts;
    for (const MultiPoly& g : gb.basis) lts.push_back(g.lm());
    // A pure power x_v^k in the leading-term ideal caps exponents of x_v at
    // k-1 everywhere; this prunes most of the enumeration tree.
    const std::size_t nv = static_cast<std::size_t>(gb.ring.nvars());
    std::vector<int> purecap(nv, topdeg + 1);
    for (const Expo& l : lts) {
        int support = -1;
        for (std::size_t v = 0; v < nv; ++v)
            if (l[v]) {
                support = support == -1 ? static_cast<int>(v) : -2;
                if (support == -2) break;
            }
        if (support >= 0)
            purecap[static_cast<std::size_t>(support)] =
                std::min(purecap[static_cast<std::size_t>(support)], int(l[support]));
    }
    std::vector<long long> out(static_cast<std::size_t>(topdeg) + 1, 0);
    Expo cur(nv, 0);
    for (int d = 0; d <= topdeg; ++d) {
        if (nv == 0) {
            // constants only: degree 0 is standard unless 1 is in the ideal
            if (d == 0 && lts.empty()) out[0] = 1;
            continue;
        }
        detail::count_standard(lts, purecap, cur, 0, d, out, d);
    }
    return out;
}

} // namespace wfm
