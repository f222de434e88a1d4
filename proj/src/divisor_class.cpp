#include "mbar/divisor_class.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mbar {

namespace {

constexpr int kSubsetSweepCap = 12;  // full 2^n sweeps refuse larger n

void check_sweep(int n, const char* what) {
    if (n > kSubsetSweepCap)
        throw ValidationError(std::string(what) + ": full-subset enumeration limited to n <= " +
                              std::to_string(kSubsetSweepCap) + ", got n = " + std::to_string(n));
}

void check_same_space(const DivisorClass& a, const DivisorClass& b) {
    if (a.g() != b.g() || a.n() != b.n())
        throw ValidationError("space mismatch: (g, n) = (" + std::to_string(a.g()) + ", " + std::to_string(a.n()) +
                              ") vs (" + std::to_string(b.g()) + ", " + std::to_string(b.n()) + ")");
}

}  // namespace

DivisorClass::DivisorClass(int g, int n) : g_(g), n_(n) {
    if (g < 1) throw ValidationError("genus g = " + std::to_string(g) + " must be >= 1");
    if (n < 0 || n > kMaxPoints)
        throw ValidationError("marked point count n = " + std::to_string(n) + " outside [0, " + std::to_string(kMaxPoints) + "]");
}

Rational DivisorClass::coeff(const BasisSymbol& s) const {
    BasisSymbol key = s;
    if (s.kind == SymKind::DeltaH) key = canonicalize_boundary(s.h, s.P, g_, n_);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DivisorClass::add_term(const BasisSymbol& s, const Rational& c) {
    if (sgn(c) == 0) return;
    check_symbol(s, g_, n_);
    BasisSymbol key = s;
    if (s.kind == SymKind::DeltaH) key = canonicalize_boundary(s.h, s.P, g_, n_);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void DivisorClass::add_boundary(int h, MarkedSubset P, const Rational& c) {
    add_term(BasisSymbol::deltaH(h, P), c);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
    check_same_space(*this, rhs);
    for (const auto& [s, c] : rhs.terms_) add_term(s, c);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
    check_same_space(*this, rhs);
    for (const auto& [s, c] : rhs.terms_) add_term(s, -c);
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, v] : terms_) v *= c;
    return *this;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass out(g_, n_);
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
    return out;
}

DivisorClass boundary_sum_positive_genus(int g, int n) {
    check_sweep(n, "boundary divisor sum");
    DivisorClass out(g, n);
    std::set<BasisSymbol> seen;
    for (int h = 1; h < g; ++h) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            BasisSymbol key = canonicalize_boundary(h, MarkedSubset(static_cast<std::uint16_t>(bits)), g, n);
            if (seen.insert(key).second) out.add_term(key, Rational(1));
        }
    }
    return out;
}

DivisorClass DivisorClass::to_lambda_basis() const {
    auto it = terms_.find(BasisSymbol::kappa1());
    if (it == terms_.end()) return *this;
    const Rational k = it->second;
    DivisorClass out(g_, n_);
    for (const auto& [s, c] : terms_)
        if (s.kind != SymKind::Kappa1) out.add_term(s, c);
    out.add_term(BasisSymbol::lambda1(), 12 * k);
    out.add_term(BasisSymbol::delta0(), -k);
    out -= k * boundary_sum_positive_genus(g_, n_);
    return out;
}

bool DivisorClass::equals(const DivisorClass& rhs) const {
    check_same_space(*this, rhs);
    const DivisorClass a = to_lambda_basis();
    const DivisorClass b = rhs.to_lambda_basis();
    return a.terms_ == b.terms_;
}

DivisorClass sym_class(int g, int n, const BasisSymbol& s) {
    DivisorClass out(g, n);
    out.add_term(s, Rational(1));
    return out;
}

namespace {

/// Shared core of the forgetful pullbacks: the source space has s points
/// (s = 1 or 2) which map to the target points targets[0..s-1]. A boundary
/// key (h, P0) pulls back to the sum over all target subsets P whose
/// membership pattern on the retained points matches P0. Each input term is
/// processed once through its stored canonical representative; the result
/// does not depend on the choice of representative.
DivisorClass pullback_forget(const DivisorClass& c, std::span<const int> targets, int n) {
    const int s = static_cast<int>(targets.size());
    if (c.n() != s)
        throw ValidationError("pullback source has n = " + std::to_string(c.n()) + ", expected " + std::to_string(s));
    for (int i = 0; i < s; ++i) {
        if (targets[i] < 1 || targets[i] > n)
            throw ValidationError("target point index " + std::to_string(targets[i]) + " outside [1, " + std::to_string(n) + "]");
        for (int k = 0; k < i; ++k)
            if (targets[k] == targets[i])
                throw ValidationError("target point indices must be distinct, got " + std::to_string(targets[i]) + " twice");
    }
    check_sweep(n, "forgetful pullback");

    DivisorClass out(c.g(), n);
    for (const auto& [sym, v] : c.terms()) {
        switch (sym.kind) {
            case SymKind::Lambda1:
            case SymKind::Kappa1:
            case SymKind::Delta0:
                out.add_term(sym, v);
                break;
            case SymKind::Psi:
                out.add_term(BasisSymbol::psi(targets[sym.j - 1]), v);
                break;
            case SymKind::Delta0P: {
                // Only subsets containing every retained point survive; a
                // genus-0 tail losing one of them destabilizes and contracts.
                std::uint32_t need = 0;
                for (int i = 0; i < s; ++i)
                    if (sym.P.contains(i + 1)) need |= 1u << (targets[i] - 1);
                for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                    if ((bits & need) != need) continue;
                    MarkedSubset P(static_cast<std::uint16_t>(bits));
                    if (P.size() < 2) continue;
                    out.add_term(BasisSymbol::delta0P(P), v);
                }
                break;
            }
            case SymKind::DeltaH: {
                std::uint32_t want = 0, mask = 0;
                for (int i = 0; i < s; ++i) {
                    mask |= 1u << (targets[i] - 1);
                    if (sym.P.contains(i + 1)) want |= 1u << (targets[i] - 1);
                }
                for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                    if ((bits & mask) != want) continue;
                    out.add_boundary(sym.h, MarkedSubset(static_cast<std::uint16_t>(bits)), v);
                }
                break;
            }
        }
    }
    return out;
}

}  // namespace

DivisorClass pullback_point_forget(const DivisorClass& c, int j, int n) {
    const int targets[1] = {j};
    return pullback_forget(c, targets, n);
}

DivisorClass pullback_pair_forget(const DivisorClass& c, int j, int k, int n) {
    if (j == k) throw ValidationError("pair pullback needs distinct target indices, got j = k = " + std::to_string(j));
    const int targets[2] = {j, k};
    return pullback_forget(c, targets, n);
}

DivisorClass pullback_base(const DivisorClass& c, int n) {
    if (c.n() != 0)
        throw ValidationError("base pullback source must have n = 0, got n = " + std::to_string(c.n()));
    check_sweep(n, "base pullback");
    DivisorClass out(c.g(), n);
    for (const auto& [sym, v] : c.terms()) {
        if (sym.kind == SymKind::DeltaH) {
            // A boundary divisor of the unpointed space splits into every
            // distribution of the points over its two sides, multiplicity 1:
            // enumerate raw (h, P) keys and keep each canonical key once.
            std::set<BasisSymbol> seen;
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                BasisSymbol key = canonicalize_boundary(sym.h, MarkedSubset(static_cast<std::uint16_t>(bits)), c.g(), n);
                if (seen.insert(key).second) out.add_term(key, v);
            }
        } else {
            out.add_term(sym, v);
        }
    }
    return out;
}

DivisorClass restrict_to_diagonal(const DivisorClass& c) {
    if (c.n() != 2)
        throw ValidationError("diagonal restriction source must have n = 2, got n = " + std::to_string(c.n()));
    DivisorClass out(c.g(), 1);
    const MarkedSubset both(0b11);
    const MarkedSubset x1(0b01);
    for (const auto& [sym, v] : c.terms()) {
        switch (sym.kind) {
            case SymKind::Lambda1:
            case SymKind::Kappa1:
            case SymKind::Delta0:
                out.add_term(sym, v);
                break;
            case SymKind::Psi:
                out.add_term(BasisSymbol::psi(1), v);
                break;
            case SymKind::Delta0P:
                // delta_0^{x1,x2} is the diagonal itself; pulling a divisor
                // back to it yields minus the normal bundle class, -psi.
                out.add_term(BasisSymbol::psi(1), -v);
                break;
            case SymKind::DeltaH:
                if (sym.P == both || sym.P.empty()) {
                    out.add_boundary(sym.h, sym.P == both ? x1 : MarkedSubset{}, v);
                }
                // keys separating x1 from x2 meet the diagonal in codim >= 2
                break;
        }
    }
    return out;
}

DivisorClass permute_marked_points(const DivisorClass& c, std::span<const int> perm) {
    const int n = c.n();
    if (static_cast<int>(perm.size()) != n)
        throw ValidationError("permutation length " + std::to_string(perm.size()) + " != n = " + std::to_string(n));
    std::uint32_t hit = 0;
    for (int v : perm) {
        if (v < 1 || v > n || (hit & (1u << (v - 1))))
            throw ValidationError("not a permutation of {1.." + std::to_string(n) + "}");
        hit |= 1u << (v - 1);
    }
    auto map_subset = [&](MarkedSubset P) {
        MarkedSubset out;
        for (int j = 1; j <= n; ++j)
            if (P.contains(j)) out = out.with(perm[j - 1]);
        return out;
    };
    DivisorClass out(c.g(), n);
    for (const auto& [sym, v] : c.terms()) {
        BasisSymbol t = sym;
        if (sym.kind == SymKind::Psi) t = BasisSymbol::psi(perm[sym.j - 1]);
        if (sym.kind == SymKind::Delta0P) t = BasisSymbol::delta0P(map_subset(sym.P));
        if (sym.kind == SymKind::DeltaH) t = BasisSymbol::deltaH(sym.h, map_subset(sym.P));
        out.add_term(t, v);
    }
    return out;
}

FormalPower::FormalPower(Rational scale_, int exponent_, DivisorClass base_)
    : scale(std::move(scale_)), exponent(exponent_), base(std::move(base_)) {
    if (exponent <= 0) throw ValidationError("formal power exponent must be positive");
    mpz_class fact = factorial(exponent);
    if (!mpz_divisible_p(fact.get_mpz_t(), scale.get_den().get_mpz_t()))
        throw ValidationError("formal power scale denominator " + scale.get_den().get_str() +
                              " does not divide " + std::to_string(exponent) + "!");
}

std::string format_symbol(const BasisSymbol& s, int n) {
    auto subset = [](MarkedSubset P) {
        std::string out = "{";
        bool first = true;
        for (int j : P.indices()) {
            if (!first) out += ",";
            out += "x" + std::to_string(j);
            first = false;
        }
        return out + "}";
    };
    switch (s.kind) {
        case SymKind::Lambda1: return "lambda1";
        case SymKind::Kappa1: return "kappa1";
        case SymKind::Psi: return n == 1 ? "psi" : "psi_" + std::to_string(s.j);
        case SymKind::Delta0: return "delta0";
        case SymKind::Delta0P: return "delta0^" + subset(s.P);
        case SymKind::DeltaH: {
            std::string out = "delta_" + std::to_string(int(s.h));
            if (n > 0) out += "^" + subset(s.P);
            return out;
        }
    }
    return "?";
}

std::string format_class(const DivisorClass& c) {
    if (c.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, v] : c.terms()) {
        Rational a = abs(v);
        if (first) {
            if (sgn(v) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(v) < 0 ? " - " : " + ");
        }
        if (a != 1) out << rat_str(a) << "·";
        out << format_symbol(s, c.n());
    }
    return out.str();
}

std::string format_formal_power(const FormalPower& p) {
    std::ostringstream out;
    if (p.scale != 1) out << rat_str(p.scale) << "·";
    out << "(" << format_class(p.base) << ")^" << p.exponent;
    return out.str();
}

}  // namespace mbar
