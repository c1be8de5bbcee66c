#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wfm {

/// A univariate class polynomial in the hyperplane class h: coeff[j] * h^j.
using UniClass = std::vector<Rat>;

/// One monomial coeff * h_a^i * h_b^j of the bivariate diagonal template.
struct DiagTerm {
    int i;
    int j;
    Rat coeff;
};

/// Chow data of a cellular base X needed downstream: dimension, tangent
/// Chern classes, the Kunneth class of the diagonal in X x X, and the Chow
/// Betti numbers.  Only X = P^m ships, but the whole intersection-theory
/// layer consumes this interface rather than projective-space specifics.
struct CellularBase {
    int m = 1;
    std::string hyperplane_symbol = "h";
    std::vector<UniClass> tangent_chern;  // c_0..c_m of T_X
    std::vector<DiagTerm> diagonal_class; // template in (h_a, h_b), homogeneous of degree m
    std::vector<int> poincare;            // ranks of A^0..A^m(X)
};

/// X = P^m: c(T) = (1+h)^{m+1} truncated by h^{m+1} = 0, diagonal class
/// sum_{i+j=m} h_a^i h_b^j, all Chow Betti numbers 1.
inline CellularBase projective_space(int m) {
    if (m < 1) throw InputError("projective_space: m must be >= 1");
    CellularBase X;
    X.m = m;
    X.tangent_chern.resize(static_cast<std::size_t>(m) + 1);
    Int binom = 1;
    for (int i = 0; i <= m; ++i) {
        if (i > 0) binom = binom * (m + 2 - i) / i; // binomial(m+1, i)
        UniClass c(static_cast<std::size_t>(i) + 1, Rat(0));
        c[static_cast<std::size_t>(i)] = Rat(binom);
        X.tangent_chern[static_cast<std::size_t>(i)] = std::move(c);
    }
    for (int i = 0; i <= m; ++i) X.diagonal_class.push_back(DiagTerm{i, m - i, Rat(1)});
    X.poincare.assign(static_cast<std::size_t>(m) + 1, 1);

    // Euler-class self-intersection: the diagonal template is homogeneous of
    // degree m and restricted to h_a = h_b = h must equal c_m(T_X).  Guards
    // the hand-entered data.
    Rat restricted = 0;
    for (const DiagTerm& t : X.diagonal_class) {
        if (t.i + t.j != m) throw std::logic_error("diagonal template not homogeneous");
        restricted += t.coeff;
    }
    if (restricted != X.tangent_chern.back().back())
        throw std::logic_error("cellular base data inconsistent: diagonal vs c_m");
    return X;
}

inline std::vector<int> base_poincare(const CellularBase& X) { return X.poincare; }

} // namespace wfm
