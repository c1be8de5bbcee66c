#pragma once

#include <map>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "presentation.hpp"

namespace wfm {

/// Graded ranks in degrees 0..top; for the compactification top = n*m and
/// the table is a palindrome with ranks[0] == ranks[top] == 1.
struct BettiTable {
    std::vector<long long> ranks;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < ranks.size(); ++i)
            s += (i ? "," : "") + std::to_string(ranks[i]);
        return s + ")";
    }
};

/// Betti numbers of the n-fold product of a base with ranks (1,1,...,1) in
/// degrees 0..m: iterated convolution.
inline std::vector<long long> kunneth_table(int m, int n) {
    std::vector<long long> t{1};
    for (int f = 0; f < n; ++f) {
        std::vector<long long> next(t.size() + static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < t.size(); ++i)
            for (int j = 0; j <= m; ++j) next[i + static_cast<std::size_t>(j)] += t[i];
        t = std::move(next);
    }
    return t;
}

/// Graded ranks of the quotient by the presentation ideal, computed from a
/// degree-truncated Grobner basis.
inline BettiTable hilbert_function(const Presentation& P, const Caps& caps = {}) {
    const int top = P.top_degree();
    ReducedGB gb = groebner_basis(P.ring, P.generators(), top, caps);
    return BettiTable{standard_monomial_counts(gb, top)};
}

/// Betti numbers by walking the blowup sequence: start from the product and
/// add, for each center of codimension d >= 2, the shifted Betti numbers of
/// the center taken d-1 times.  Exceptional contributions use the center's
/// presentation inside the previous stage, so this never touches the final
/// presentation and serves as an independent oracle for it.
inline BettiTable keel_betti(const CellularBase& base, const OrderedBuildingSet& G,
                             const Caps& caps = {}) {
    const int m = base.m, n = G.n(), top = m * n;
    std::vector<long long> B = kunneth_table(m, n);
    for (int j = 0; j < static_cast<int>(G.size()); ++j) {
        const int d = m * (G.at(j).size() - 1);
        if (d < 2) continue;
        std::vector<long long> C;
        if (j == 0) {
            // first center: a diagonal inside the bare product
            Ring ring(n, m, {});
            std::vector<MultiPoly> gens = detail::truncation_family(ring, base);
            for (MultiPoly& lin : j_ideal(ring, G.at(0))) gens.push_back(std::move(lin));
            C = standard_monomial_counts(groebner_basis(ring, gens, top, caps), top);
        } else {
            Presentation stage = stage_presentation(base, G, j - 1);
            std::vector<MultiPoly> gens = stage.generators();
            for (MultiPoly& ker : center_kernel(base, G, j - 1, j)) gens.push_back(std::move(ker));
            C = standard_monomial_counts(groebner_basis(stage.ring, gens, top, caps), top);
        }
        for (int k = top; k >= 0; --k)
            for (int i = 1; i < d; ++i)
                if (k - i >= 0) B[static_cast<std::size_t>(k)] += C[static_cast<std::size_t>(k - i)];
    }
    return BettiTable{std::move(B)};
}

inline BettiTable keel_betti(const CellularBase& base, const WeightVector& A,
                             const Caps& caps = {}) {
    return keel_betti(base, building_set(A), caps);
}

/// Integral of a top-degree class: the coefficient of the point class
/// h_1^m ... h_n^m in the normal form.  Exact integer; InputError unless p
/// is homogeneous of degree n*m.
inline Int degree(const MultiPoly& p, const Presentation& P, const Caps& caps = {}) {
    const int top = P.top_degree();
    if (!p.is_zero() && !(p.homogeneous() && p.degree() == top))
        throw InputError("degree expects a homogeneous class of degree " + std::to_string(top));
    ReducedGB gb = groebner_basis(P.ring, P.generators(), top, caps);
    auto counts = standard_monomial_counts(gb, top);
    if (counts[static_cast<std::size_t>(top)] != 1)
        throw std::logic_error("top graded piece is not one-dimensional");
    Expo point(static_cast<std::size_t>(P.ring.nvars()), 0);
    for (int a = 1; a <= P.ring.n(); ++a)
        point[static_cast<std::size_t>(P.ring.hvar(a))] = static_cast<std::uint8_t>(P.base.m);
    MultiPoly pointp = MultiPoly::from_terms({{point, Rat(1)}});
    if (!(normal_form(gb, pointp) == pointp))
        throw std::logic_error("point class is not its own normal form");
    MultiPoly nf = normal_form(gb, p);
    if (nf.is_zero()) return 0;
    if (nf.term_count() != 1 || !(nf.lm() == point))
        throw std::logic_error("top-degree normal form is not a multiple of the point class");
    const Rat& c = nf.lc();
    if (denominator(c) != 1)
        throw std::logic_error("degree came out non-integral");
    return numerator(c);
}

namespace detail {

inline void enumerate_monomials_rec(std::size_t nv, std::size_t v, int rest, Expo& cur,
                                    std::vector<Expo>& out) {
    if (v + 1 == nv) {
        cur[v] = static_cast<std::uint8_t>(rest);
        out.push_back(cur);
        cur[v] = 0;
        return;
    }
    for (int e = 0; e <= rest; ++e) {
        cur[v] = static_cast<std::uint8_t>(e);
        enumerate_monomials_rec(nv, v + 1, rest - e, cur, out);
    }
    cur[v] = 0;
}

inline std::vector<Expo> enumerate_monomials(int nvars, int d) {
    std::vector<Expo> out;
    Expo cur(static_cast<std::size_t>(nvars), 0);
    if (nvars == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    enumerate_monomials_rec(static_cast<std::size_t>(nvars), 0, d, cur, out);
    return out;
}

/// Row rank by fraction-free-ish Gaussian elimination over the rationals.
inline int matrix_rank(std::vector<std::vector<Rat>>& rows, std::size_t ncols) {
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[row][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Quotient ranks in degrees 0..maxd by plain linear algebra over the
/// rationals: no Grobner machinery, so it cross-checks the counting above.
inline std::vector<long long> low_degree_ranks(const Presentation& P, int maxd,
                                               const Caps& caps = {}) {
    if (P.ring.nvars() > caps.max_vars)
        throw ResourceError("variable count exceeds cap");
    if (maxd > caps.max_degree) throw ResourceError("degree exceeds cap");
    std::vector<MultiPoly> gens = P.generators();
    std::vector<long long> out;
    for (int d = 0; d <= maxd; ++d) {
        std::vector<Expo> monos = detail::enumerate_monomials(P.ring.nvars(), d);
        std::map<Expo, std::size_t, DrlGreater> col;
        for (std::size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], 0);
        std::size_t idx = 0;
        for (auto& [mono, c] : col) c = idx++;
        std::vector<std::vector<Rat>> rows;
        for (const MultiPoly& g : gens) {
            if (g.is_zero() || g.degree() > d) continue;
            for (const Expo& shift : detail::enumerate_monomials(P.ring.nvars(), d - g.degree())) {
                std::vector<Rat> row(monos.size(), Rat(0));
                for (const auto& [mono, c] : g.terms()) row[col.at(mono_mul(mono, shift))] = c;
                rows.push_back(std::move(row));
            }
        }
        int rank = detail::matrix_rank(rows, monos.size());
        out.push_back(static_cast<long long>(monos.size()) - rank);
    }
    return out;
}

} // namespace wfm
