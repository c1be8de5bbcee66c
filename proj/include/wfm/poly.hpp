#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"
#include "rational.hpp"

namespace wfm {

/// Variable table of the ambient ring of a presentation: divisor variables
/// D^S first (in building-set order), then h_1..h_n.  The monomial order is
/// graded reverse lexicographic over that ranking; in degree one every D
/// outranks every h, so linear relations rewrite divisors, not the base.
class Ring {
public:
    Ring() = default;
    Ring(int n, int m, std::vector<IndexSet> dsets)
        : n_(n), m_(m), dsets_(std::move(dsets)) {
        for (std::size_t i = 0; i < dsets_.size(); ++i)
            dpos_.emplace(dsets_[i].mask(), static_cast<int>(i));
    }

    int n() const { return n_; }
    int m() const { return m_; }
    int nd() const { return static_cast<int>(dsets_.size()); }
    int nvars() const { return nd() + n_; }
    const std::vector<IndexSet>& dsets() const { return dsets_; }

    int hvar(int label) const {
        if (label < 1 || label > n_)
            throw InputError("h label out of range: " + std::to_string(label));
        return nd() + label - 1;
    }

    /// Variable index of D^S, or -1 when S has no divisor variable here.
    int dvar(IndexSet S) const {
        auto it = dpos_.find(S.mask());
        return it == dpos_.end() ? -1 : it->second;
    }

    bool is_dvar(int v) const { return v >= 0 && v < nd(); }

    std::string var_name(int v) const {
        if (v < 0 || v >= nvars()) throw InputError("variable index out of range");
        if (v < nd()) return "D_" + dsets_[static_cast<std::size_t>(v)].label();
        return "h" + std::to_string(v - nd() + 1);
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.dsets_ == b.dsets_;
    }

private:
    int n_ = 0;
    int m_ = 1;
    std::vector<IndexSet> dsets_;
    std::unordered_map<std::uint64_t, int> dpos_;
};

/// Exponent vector; entry v is the power of ring variable v.
using Expo = std::vector<std::uint8_t>;

inline int total_degree(const Expo& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded reverse lexicographic: compare total degree, then the last
/// differing variable, where the larger exponent there loses.
inline bool drl_less(const Expo& a, const Expo& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t v = a.size(); v-- > 0;)
        if (a[v] != b[v]) return a[v] > b[v];
    return false;
}

struct DrlGreater {
    bool operator()(const Expo& a, const Expo& b) const { return drl_less(b, a); }
};

inline bool mono_divides(const Expo& a, const Expo& b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] > b[v]) return false;
    return true;
}

inline Expo mono_mul(const Expo& a, const Expo& b) {
    Expo r = a;
    for (std::size_t v = 0; v < r.size(); ++v)
        r[v] = static_cast<std::uint8_t>(r[v] + b[v]);
    return r;
}

/// b / a, requiring divisibility.
inline Expo mono_quot(const Expo& b, const Expo& a) {
    Expo r = b;
    for (std::size_t v = 0; v < r.size(); ++v)
        r[v] = static_cast<std::uint8_t>(r[v] - a[v]);
    return r;
}

inline Expo mono_lcm(const Expo& a, const Expo& b) {
    Expo r = a;
    for (std::size_t v = 0; v < r.size(); ++v)
        r[v] = std::max(r[v], b[v]);
    return r;
}

/// Sparse polynomial with exact coefficients; terms kept strictly
/// drl-descending with nonzero coefficients (canonical form).
template <class C>
class Poly {
public:
    using Term = std::pair<Expo, C>;

    Poly() = default;

    static Poly from_terms(std::vector<Term> raw) {
        std::map<Expo, C, DrlGreater> acc;
        for (auto& [mono, c] : raw) {
            auto [it, fresh] = acc.emplace(std::move(mono), c);
            if (!fresh) it->second += c;
        }
        Poly p;
        for (auto& [mono, c] : acc)
            if (c != 0) p.terms_.emplace_back(mono, c);
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Expo& lm() const { return terms_.front().first; }
    const C& lc() const { return terms_.front().second; }

    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.front().first); }

    bool homogeneous() const {
        for (const Term& t : terms_)
            if (total_degree(t.first) != degree()) return false;
        return true;
    }

    Poly operator-() const {
        Poly r = *this;
        for (Term& t : r.terms_) t.second = -t.second;
        return r;
    }

    /// f + scale * g, merging two canonical term lists.
    static Poly axpy(const Poly& f, const C& scale, const Poly& g) {
        Poly r;
        r.terms_.reserve(f.terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < f.terms_.size() || j < g.terms_.size()) {
            bool takef;
            if (i == f.terms_.size())
                takef = false;
            else if (j == g.terms_.size())
                takef = true;
            else if (f.terms_[i].first == g.terms_[j].first) {
                C c = f.terms_[i].second + scale * g.terms_[j].second;
                if (c != 0) r.terms_.emplace_back(f.terms_[i].first, std::move(c));
                ++i, ++j;
                continue;
            } else
                takef = drl_less(g.terms_[j].first, f.terms_[i].first);
            if (takef) {
                r.terms_.push_back(f.terms_[i]);
                ++i;
            } else {
                C c = scale * g.terms_[j].second;
                if (c != 0) r.terms_.emplace_back(g.terms_[j].first, std::move(c));
                ++j;
            }
        }
        return r;
    }

    friend Poly operator+(const Poly& f, const Poly& g) { return axpy(f, C(1), g); }
    friend Poly operator-(const Poly& f, const Poly& g) { return axpy(f, C(-1), g); }

    Poly scaled(const C& c) const {
        if (c == 0) return {};
        Poly r = *this;
        for (Term& t : r.terms_) t.second *= c;
        return r;
    }

    Poly times_monomial(const Expo& mono, const C& c) const {
        if (c == 0) return {};
        Poly r;
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.emplace_back(mono_mul(t.first, mono), t.second * c);
        return r; // multiplying by a monomial preserves the drl order
    }

    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::map<Expo, C, DrlGreater> acc;
        for (const Term& a : f.terms_)
            for (const Term& b : g.terms_) {
                Expo mono = mono_mul(a.first, b.first);
                C c = a.second * b.second;
                auto [it, fresh] = acc.emplace(std::move(mono), std::move(c));
                if (!fresh) it->second += a.second * b.second;
            }
        Poly r;
        for (auto& [mono, c] : acc)
            if (c != 0) r.terms_.emplace_back(mono, c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Term> terms_;
};

using MultiPoly = Poly<Rat>;

inline MultiPoly const_poly(const Ring& ring, const Rat& c) {
    if (c == 0) return {};
    return MultiPoly::from_terms({{Expo(static_cast<std::size_t>(ring.nvars()), 0), c}});
}

inline MultiPoly var_poly(const Ring& ring, int v, int power = 1, const Rat& c = Rat(1)) {
    if (v < 0 || v >= ring.nvars()) throw InputError("variable index out of range");
    Expo e(static_cast<std::size_t>(ring.nvars()), 0);
    e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
    return MultiPoly::from_terms({{std::move(e), c}});
}

inline MultiPoly hpow(const Ring& ring, int label, int power, const Rat& c = Rat(1)) {
    return var_poly(ring, ring.hvar(label), power, c);
}

inline MultiPoly pow(const MultiPoly& p, int e) {
    MultiPoly r = p; // fast exponent paths are pointless at these sizes
    if (e == 0) throw InputError("pow: use const_poly for exponent 0");
    for (int i = 1; i < e; ++i) r = r * p;
    return r;
}

template <class C>
std::string poly_str(const Ring& ring, const Poly<C>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        C abs = c < 0 ? C(-c) : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string vars;
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (!mono[v]) continue;
            if (!vars.empty()) vars += '*';
            vars += ring.var_name(static_cast<int>(v));
            if (mono[v] > 1) vars += "^" + std::to_string(int(mono[v]));
        }
        std::string cs = [&] {
            if constexpr (std::is_same_v<C, Rat>) return rat_str(abs);
            else return abs.str();
        }();
        if (vars.empty())
            s += cs;
        else if (abs == 1)
            s += vars;
        else
            s += cs + "*" + vars;
    }
    return s;
}

} // namespace wfm
