#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace wfm {

namespace detail {

struct PolyParser {
    const Ring& ring;
    std::string_view text;
    std::size_t pos = 0;
    std::unordered_map<std::string, int> varidx;

    explicit PolyParser(const Ring& r, std::string_view t) : ring(r), text(t) {
        for (int v = 0; v < ring.nvars(); ++v) varidx.emplace(ring.var_name(v), v);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw InputError("polynomial parse error at column " + std::to_string(pos + 1) + ": " +
                         what);
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    Rat parse_coeff() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        return parse_rational(text.substr(start, pos - start));
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a variable name");
        return std::string(text.substr(start, pos - start));
    }

    /// factor := rational | varname ['^' int]
    void parse_factor(Expo& mono, Rat& coeff) {
        skip_ws();
        if (pos >= text.size()) fail("expected a factor");
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff *= parse_coeff();
            return;
        }
        std::string name = parse_name();
        auto it = varidx.find(name);
        if (it == varidx.end()) fail("unknown variable '" + name + "'");
        int e = 1;
        if (eat('^')) e = parse_int();
        if (e < 0 || mono[static_cast<std::size_t>(it->second)] + e > 255)
            fail("exponent out of range");
        mono[static_cast<std::size_t>(it->second)] =
            static_cast<std::uint8_t>(mono[static_cast<std::size_t>(it->second)] + e);
    }

    MultiPoly parse() {
        std::vector<MultiPoly::Term> terms;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= text.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            Rat sign = 1;
            if (eat('-'))
                sign = -1;
            else if (!eat('+') && !first)
                fail("expected '+' or '-'");
            Expo mono(static_cast<std::size_t>(ring.nvars()), 0);
            Rat coeff = sign;
            parse_factor(mono, coeff);
            while (eat('*')) parse_factor(mono, coeff);
            terms.emplace_back(std::move(mono), std::move(coeff));
            first = false;
        }
        return MultiPoly::from_terms(std::move(terms));
    }
};

} // namespace detail

/// Parse expressions like "D_123^3", "2*h1*h2 - 1/2*h3^2 + D_12*h1".
inline MultiPoly parse_poly(const Ring& ring, std::string_view text) {
    detail::PolyParser p(ring, text);
    return p.parse();
}

} // namespace wfm
