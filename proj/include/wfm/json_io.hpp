#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "betti.hpp"
#include "building_set.hpp"
#include "errors.hpp"
#include "morphisms.hpp"
#include "nests.hpp"
#include "presentation.hpp"

namespace wfm {

using Json = nlohmann::json;

inline Json weights_json(const WeightVector& A) {
    Json arr = Json::array();
    for (const Rat& a : A.w) arr.push_back(rat_str(a));
    return arr;
}

inline WeightVector weights_from_json(const Json& arr) {
    if (!arr.is_array()) throw InputError("weights: expected an array of rational strings");
    std::vector<Rat> w;
    for (const Json& e : arr) w.push_back(parse_rational(e.get<std::string>()));
    return make_weights(std::move(w));
}

inline Json indexset_json(IndexSet S) {
    Json arr = Json::array();
    for (int a : S.members()) arr.push_back(a);
    return arr;
}

inline Json indexsets_json(const std::vector<IndexSet>& sets) {
    Json arr = Json::array();
    for (IndexSet S : sets) arr.push_back(indexset_json(S));
    return arr;
}

/// Terms in canonical drl-descending order; coefficients are exact rational
/// strings; the zero polynomial is the empty array.
inline Json poly_json(const Ring& ring, const MultiPoly& p) {
    Json arr = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        Json mo = Json::object();
        for (std::size_t v = 0; v < mono.size(); ++v)
            if (mono[v]) mo[ring.var_name(static_cast<int>(v))] = int(mono[v]);
        arr.push_back(Json{{"coeff", rat_str(c)}, {"monomial", std::move(mo)}});
    }
    return arr;
}

inline MultiPoly poly_from_json(const Ring& ring, const Json& arr) {
    if (!arr.is_array()) throw InputError("polynomial: expected an array of terms");
    std::unordered_map<std::string, int> varidx;
    for (int v = 0; v < ring.nvars(); ++v) varidx.emplace(ring.var_name(v), v);
    std::vector<MultiPoly::Term> terms;
    for (const Json& t : arr) {
        Rat c = parse_rational(t.at("coeff").get<std::string>());
        Expo e(static_cast<std::size_t>(ring.nvars()), 0);
        for (auto it = t.at("monomial").begin(); it != t.at("monomial").end(); ++it) {
            auto found = varidx.find(it.key());
            if (found == varidx.end()) throw InputError("unknown variable " + it.key());
            int exp = it.value().get<int>();
            if (exp < 1 || exp > 255) throw InputError("exponent out of range for " + it.key());
            e[static_cast<std::size_t>(found->second)] = static_cast<std::uint8_t>(exp);
        }
        terms.emplace_back(std::move(e), std::move(c));
    }
    return MultiPoly::from_terms(std::move(terms));
}

inline Json polys_json(const Ring& ring, const std::vector<MultiPoly>& polys) {
    Json arr = Json::array();
    for (const MultiPoly& p : polys) arr.push_back(poly_json(ring, p));
    return arr;
}

inline std::vector<MultiPoly> polys_from_json(const Ring& ring, const Json& arr) {
    std::vector<MultiPoly> out;
    for (const Json& p : arr) out.push_back(poly_from_json(ring, p));
    return out;
}

inline Json presentation_json(const Presentation& P) {
    Json vars = Json::array();
    for (int v = 0; v < P.ring.nvars(); ++v)
        vars.push_back(Json{{"name", P.ring.var_name(v)}, {"degree", 1}});
    Json ideal{{"base", polys_json(P.ring, P.fam_base)},
               {"overlap", polys_json(P.ring, P.fam_overlap)},
               {"linear", polys_json(P.ring, P.fam_linear)},
               {"weak_overlap", polys_json(P.ring, P.fam_weak)},
               {"chern", polys_json(P.ring, P.fam_chern)}};
    return Json{{"n", P.G.n()},
                {"m", P.base.m},
                {"weights", weights_json(P.G.weights())},
                {"variables", std::move(vars)},
                {"ideal", std::move(ideal)}};
}

/// Parse the label part of a divisor variable name: digits are single
/// labels unless underscores separate multi-digit ones.
inline IndexSet indexset_from_label(const std::string& s) {
    IndexSet S;
    if (s.empty()) throw InputError("bad divisor label: empty");
    if (s.find('_') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find('_', pos);
            if (next == std::string::npos) next = s.size();
            std::string part = s.substr(pos, next - pos);
            if (part.empty() ||
                part.find_first_not_of("0123456789") != std::string::npos)
                throw InputError("bad divisor label: " + s);
            int label = std::stoi(part);
            if (label < 1 || label > 64) throw InputError("bad divisor label: " + s);
            S = S.with(label);
            pos = next + 1;
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw InputError("bad divisor label: " + s);
            S = S.with(c - '0');
        }
    }
    return S;
}

inline Presentation presentation_from_json(const Json& doc) {
    Presentation P;
    const int n = doc.at("n").get<int>();
    const int m = doc.at("m").get<int>();
    P.base = projective_space(m);
    WeightVector A = weights_from_json(doc.at("weights"));
    if (A.n() != n) throw InputError("weights length disagrees with n");
    P.G = building_set(A);

    std::vector<IndexSet> dsets;
    int hseen = 0;
    for (const Json& v : doc.at("variables")) {
        std::string name = v.at("name").get<std::string>();
        if (v.at("degree").get<int>() != 1) throw InputError("variables must have degree 1");
        if (name.rfind("D_", 0) == 0) {
            if (hseen) throw InputError("divisor variables must precede the h block");
            dsets.push_back(indexset_from_label(name.substr(2)));
        } else if (name.rfind('h', 0) == 0) {
            ++hseen;
            if (name != "h" + std::to_string(hseen))
                throw InputError("unexpected variable name " + name);
        } else {
            throw InputError("unexpected variable name " + name);
        }
    }
    if (hseen != n) throw InputError("expected h1..h" + std::to_string(n));
    for (std::size_t i = 0; i < dsets.size(); ++i)
        if (i >= P.G.size() || !(dsets[i] == P.G.at(static_cast<int>(i))))
            throw InputError("divisor variables must form a prefix of the building-set order");
    P.stage = dsets.size() == P.G.size() ? -1 : static_cast<int>(dsets.size()) - 1;
    P.ring = Ring(n, m, std::move(dsets));

    const Json& ideal = doc.at("ideal");
    P.fam_base = polys_from_json(P.ring, ideal.at("base"));
    P.fam_overlap = polys_from_json(P.ring, ideal.at("overlap"));
    P.fam_linear = polys_from_json(P.ring, ideal.at("linear"));
    P.fam_weak = polys_from_json(P.ring, ideal.at("weak_overlap"));
    P.fam_chern = polys_from_json(P.ring, ideal.at("chern"));
    return P;
}

inline Json betti_json(const BettiTable& B, const std::string& method) {
    Json ranks = Json::array();
    for (long long r : B.ranks) ranks.push_back(r);
    return Json{{"method", method}, {"ranks", std::move(ranks)}};
}

inline std::pair<BettiTable, std::string> betti_from_json(const Json& doc) {
    BettiTable B;
    for (const Json& r : doc.at("ranks")) B.ranks.push_back(r.get<long long>());
    std::string method = doc.at("method").get<std::string>();
    if (method != "groebner" && method != "keel")
        throw InputError("unknown betti method " + method);
    return {std::move(B), std::move(method)};
}

} // namespace wfm
