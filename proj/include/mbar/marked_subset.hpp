#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "mbar/errors.hpp"

namespace mbar {

/// Hard cap on the number of marked points (bitmask width).
inline constexpr int kMaxPoints = 16;

/// Subset of the marked points {x_1, ..., x_n}, stored as a bitmask where
/// bit (j-1) is point x_j. Valid masks satisfy bits < 2^n.
struct MarkedSubset {
    std::uint16_t bits = 0;

    constexpr MarkedSubset() = default;
    constexpr explicit MarkedSubset(std::uint16_t b) : bits(b) {}

    static MarkedSubset of(std::initializer_list<int> points) {
        MarkedSubset p;
        for (int j : points) p = p.with(j);
        return p;
    }

    bool contains(int j) const { return (bits >> (j - 1)) & 1u; }
    MarkedSubset with(int j) const {
        if (j < 1 || j > kMaxPoints) throw ValidationError("marked point index " + std::to_string(j) + " out of range [1," + std::to_string(kMaxPoints) + "]");
        return MarkedSubset(static_cast<std::uint16_t>(bits | (1u << (j - 1))));
    }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    MarkedSubset complement(int n) const {
        return MarkedSubset(static_cast<std::uint16_t>(((1u << n) - 1u) ^ bits));
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int j = 1; j <= kMaxPoints; ++j)
            if (contains(j)) out.push_back(j);
        return out;
    }

    friend bool operator==(MarkedSubset a, MarkedSubset b) { return a.bits == b.bits; }
    friend auto operator<=>(MarkedSubset a, MarkedSubset b) { return a.bits <=> b.bits; }
};

inline void check_subset(MarkedSubset p, int n, const char* what) {
    if (p.bits >= (1u << n))
        throw ValidationError(std::string(what) + ": subset mask " + std::to_string(p.bits) +
                              " not contained in {1.." + std::to_string(n) + "}");
}

}  // namespace mbar
