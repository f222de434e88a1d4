#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>

#include "mbar/errors.hpp"
#include "mbar/marked_subset.hpp"

namespace mbar {

enum class SymKind : std::uint8_t {
    Lambda1 = 0,  // first Chern class of the Hodge bundle
    Kappa1 = 1,   // Mumford class, kappa_1 = 12 lambda_1 - delta
    Psi = 2,      // cotangent class at marked point x_j (forgetful-natural convention)
    Delta0 = 3,   // irreducible boundary divisor
    Delta0P = 4,  // genus-0 tail carrying the points of P, |P| >= 2
    DeltaH = 5,   // genus-h / genus-(g-h) boundary divisor, points of P on the genus-h side
};

/// A basis symbol of H^2 of the moduli space of stable n-pointed genus-g
/// curves. DeltaH symbols are subject to the identification
/// (h, P) ~ (g-h, P^c); only canonical representatives are stored in classes.
///
/// Canonical representative rule: between (h, P) and (g-h, P^c), pick the
/// smaller h; if h = g-h, pick the smaller subset mask. When both agree
/// (n = 0, P = P^c = empty, h = g/2) the key is self-conjugate.
///
/// Symbols order as Lambda1, Kappa1, Psi(1..n), Delta0, Delta0P by
/// (|P|, mask), DeltaH by (h, mask). Serialization relies on this order.
struct BasisSymbol {
    SymKind kind = SymKind::Lambda1;
    std::uint8_t h = 0;   // DeltaH only
    std::uint8_t j = 0;   // Psi only
    MarkedSubset P;       // Delta0P / DeltaH only

    static BasisSymbol lambda1() { return {SymKind::Lambda1, 0, 0, MarkedSubset{}}; }
    static BasisSymbol kappa1() { return {SymKind::Kappa1, 0, 0, MarkedSubset{}}; }
    static BasisSymbol psi(int j) { return {SymKind::Psi, 0, static_cast<std::uint8_t>(j), MarkedSubset{}}; }
    static BasisSymbol delta0() { return {SymKind::Delta0, 0, 0, MarkedSubset{}}; }
    static BasisSymbol delta0P(MarkedSubset p) { return {SymKind::Delta0P, 0, 0, p}; }
    static BasisSymbol deltaH(int h, MarkedSubset p) { return {SymKind::DeltaH, static_cast<std::uint8_t>(h), 0, p}; }

    friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) {
        return a.kind == b.kind && a.h == b.h && a.j == b.j && a.P == b.P;
    }
    friend std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b) {
        if (a.kind != b.kind) return a.kind <=> b.kind;
        switch (a.kind) {
            case SymKind::Psi:
                return a.j <=> b.j;
            case SymKind::Delta0P: {
                auto ka = std::make_tuple(a.P.size(), a.P.bits);
                auto kb = std::make_tuple(b.P.size(), b.P.bits);
                return ka <=> kb;
            }
            case SymKind::DeltaH: {
                auto ka = std::make_tuple(a.h, a.P.bits);
                auto kb = std::make_tuple(b.h, b.P.bits);
                return ka <=> kb;
            }
            default:
                return std::strong_ordering::equal;
        }
    }
};

/// Canonical representative of the boundary symbol (h, P) on the (g, n) space.
inline BasisSymbol canonicalize_boundary(int h, MarkedSubset P, int g, int n) {
    if (h <= 0 || h >= g)
        throw ValidationError("genus part h = " + std::to_string(h) + " outside (0, g) for g = " + std::to_string(g));
    check_subset(P, n, "delta_h^P");
    const int hc = g - h;
    const MarkedSubset Pc = P.complement(n);
    if (h < hc) return BasisSymbol::deltaH(h, P);
    if (hc < h) return BasisSymbol::deltaH(hc, Pc);
    return BasisSymbol::deltaH(h, P.bits <= Pc.bits ? P : Pc);
}

inline bool is_self_conjugate(const BasisSymbol& s, int g, int n) {
    return s.kind == SymKind::DeltaH && 2 * s.h == g && s.P == s.P.complement(n);
}

/// Validates a (possibly non-canonical) symbol against the ambient space.
inline void check_symbol(const BasisSymbol& s, int g, int n) {
    switch (s.kind) {
        case SymKind::Lambda1:
        case SymKind::Kappa1:
        case SymKind::Delta0:
            return;
        case SymKind::Psi:
            if (s.j < 1 || s.j > n)
                throw ValidationError("psi index " + std::to_string(s.j) + " outside [1, " + std::to_string(n) + "]");
            return;
        case SymKind::Delta0P:
            check_subset(s.P, n, "delta0^P");
            if (s.P.size() < 2)
                throw ValidationError("delta0^P requires |P| >= 2, got |P| = " + std::to_string(s.P.size()));
            return;
        case SymKind::DeltaH:
            if (s.h <= 0 || s.h >= g)
                throw ValidationError("genus part h = " + std::to_string(int(s.h)) + " outside (0, g) for g = " + std::to_string(g));
            check_subset(s.P, n, "delta_h^P");
            return;
    }
    throw ValidationError("unknown symbol kind");
}

}  // namespace mbar
