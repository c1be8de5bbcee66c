#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace wfm {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Canonical text form: "p" or "p/q" with q > 1, gcd(p,q) = 1.
inline std::string rat_str(const Rat& q) { return q.str(); }

inline std::string int_str(const Int& z) { return z.str(); }

namespace detail {
inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}
} // namespace detail

/// Parses "p", "+p", "-p", or "p/q".  Exact; no floating point accepted.
inline Rat parse_rational(std::string_view text) {
    auto fail = [&](const std::string& why) -> Rat {
        throw InputError("bad rational '" + std::string(text) + "': " + why);
    };
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return fail("empty");
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!detail::all_digits(num) || !detail::all_digits(den))
        return fail("expected an integer or p/q in exact form (no decimals)");
    Int n{std::string(num)}, d{std::string(den)};
    if (d == 0) return fail("zero denominator");
    Rat r = Rat(n) / Rat(d); // division canonicalizes
    return neg ? Rat(-r) : r;
}

/// Splits "1,1,1/2,2/3" into exact rationals; errors carry the token index
/// and character offset of the offending entry.
inline std::vector<Rat> parse_rational_list(std::string_view csv) {
    std::vector<Rat> out;
    std::size_t pos = 0, index = 0;
    while (true) {
        std::size_t comma = csv.find(',', pos);
        std::string_view tok =
            comma == std::string_view::npos ? csv.substr(pos) : csv.substr(pos, comma - pos);
        try {
            out.push_back(parse_rational(tok));
        } catch (const InputError& e) {
            throw InputError("entry " + std::to_string(index + 1) + " (column " +
                             std::to_string(pos + 1) + "): " + e.what());
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        ++index;
    }
    return out;
}

inline std::string format_rational_list(const std::vector<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += rat_str(v[i]);
    }
    return s;
}

} // namespace wfm
