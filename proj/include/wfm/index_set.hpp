#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wfm {

/// Subset of {1,...,n}, n <= 62, as a bitmask; bit k-1 holds label k.
/// Value type: cheap to copy, totally ordered by mask for container use.
class IndexSet {
public:
    constexpr IndexSet() = default;

    static IndexSet from_mask(std::uint64_t bits) {
        IndexSet s;
        s.bits_ = bits;
        return s;
    }

    IndexSet(std::initializer_list<int> labels) {
        for (int a : labels) *this = with(a);
    }

    static IndexSet full(int n) {
        check_label(n);
        return from_mask(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
    }

    static IndexSet single(int a) { return IndexSet{}.with(a); }

    [[nodiscard]] IndexSet with(int a) const {
        check_label(a);
        return from_mask(bits_ | (std::uint64_t{1} << (a - 1)));
    }

    bool contains(int a) const {
        return a >= 1 && a <= 62 && (bits_ >> (a - 1)) & 1;
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t mask() const { return bits_; }

    int min_label() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }
    int max_label() const { return empty() ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend IndexSet operator|(IndexSet a, IndexSet b) { return from_mask(a.bits_ | b.bits_); }
    friend IndexSet operator&(IndexSet a, IndexSet b) { return from_mask(a.bits_ & b.bits_); }
    [[nodiscard]] IndexSet minus(IndexSet o) const { return from_mask(bits_ & ~o.bits_); }

    friend bool operator==(IndexSet a, IndexSet b) = default;

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int a : members()) {
            if (!first) s += ',';
            s += std::to_string(a);
            first = false;
        }
        return s + "}";
    }

    /// Compact label for variable names: "123"; labels above 9 are joined
    /// with underscores to stay unambiguous ("1_10_12").
    std::string label() const {
        std::string s;
        bool wide = max_label() > 9;
        bool first = true;
        for (int a : members()) {
            if (!first && wide) s += '_';
            s += std::to_string(a);
            first = false;
        }
        return s;
    }

private:
    static void check_label(int a) {
        if (a < 0 || a > 62) throw InputError("index label out of range 1..62: " + std::to_string(a));
    }
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member sequences ({1,2} < {1,2,3} < {1,3}).
inline bool lex_less(IndexSet a, IndexSet b) {
    const auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

struct IndexSetHash {
    std::size_t operator()(IndexSet s) const {
        return std::hash<std::uint64_t>{}(s.mask());
    }
};

} // namespace wfm
