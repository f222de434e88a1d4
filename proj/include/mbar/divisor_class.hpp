#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mbar/basis_symbol.hpp"
#include "mbar/rational.hpp"

namespace mbar {

/// Sparse exact-rational combination of H^2 basis symbols on the moduli space
/// of stable n-pointed genus-g curves. Terms are stored on canonical keys
/// only and zero coefficients are dropped, so two equal classes have equal
/// term maps (after eliminating kappa_1; see equals()).
///
/// add_term performs "canonical accumulation": a raw boundary contribution
/// (h, P) is folded onto its canonical representative and added to whatever
/// is already there. Formulas that list a geometric divisor under both of its
/// labels therefore produce a single term carrying the summed coefficient.
class DivisorClass {
public:
    DivisorClass(int g, int n);

    int g() const { return g_; }
    int n() const { return n_; }
    const std::map<BasisSymbol, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a symbol (boundary symbols are canonicalized first).
    Rational coeff(const BasisSymbol& s) const;

    /// Adds c * s. DeltaH symbols may be given by any representative.
    void add_term(const BasisSymbol& s, const Rational& c);
    /// Adds c * delta_h^P for a raw (h, P), 0 < h < g.
    void add_boundary(int h, MarkedSubset P, const Rational& c);

    DivisorClass& operator+=(const DivisorClass& rhs);
    DivisorClass& operator-=(const DivisorClass& rhs);
    DivisorClass& operator*=(const Rational& c);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }
    DivisorClass operator-() const;

    /// Substitutes kappa_1 = 12 lambda_1 - delta_0 - (sum of the positive-genus
    /// boundary divisors, one term per geometric divisor). Output is kappa-free.
    DivisorClass to_lambda_basis() const;

    /// Exact equality as cohomology classes: both sides are reduced to the
    /// lambda basis and compared term by term. Throws on mismatched (g, n).
    bool equals(const DivisorClass& rhs) const;

private:
    int g_;
    int n_;
    std::map<BasisSymbol, Rational> terms_;
};

/// lambda_1, kappa_1, ... as classes, for building formulas.
DivisorClass sym_class(int g, int n, const BasisSymbol& s);

/// Sum of all distinct positive-genus boundary divisors delta_h^P of the
/// (g, n) space, coefficient 1 each. This is the pullback of delta - delta_0
/// from the unpointed space and the boundary part of the kappa_1 relation.
DivisorClass boundary_sum_positive_genus(int g, int n);

/// Pullback along the map forgetting all points but x_j (source: n = 1).
DivisorClass pullback_point_forget(const DivisorClass& c, int j, int n);

/// Pullback along the map forgetting all points but (x_j, x_k) (source: n = 2).
DivisorClass pullback_pair_forget(const DivisorClass& c, int j, int k, int n);

/// Pullback along the map to the unpointed space (source: n = 0).
DivisorClass pullback_base(const DivisorClass& c, int n);

/// Restriction to the diagonal x_1 = x_2 (source: n = 2, target: n = 1):
/// psi_1, psi_2 -> psi; delta_0^{x1,x2} -> -psi (its normal bundle class);
/// two-points-together boundary keys keep their genus type; split keys die.
DivisorClass restrict_to_diagonal(const DivisorClass& c);

/// Relabels marked points by a permutation (perm[j-1] is the image of j).
DivisorClass permute_marked_points(const DivisorClass& c, std::span<const int> perm);

/// Unexpanded scale * base^exponent, for classes of degree 2g presented as a
/// power of a divisor class. The scale denominator must divide exponent!.
struct FormalPower {
    Rational scale;
    int exponent;
    DivisorClass base;

    FormalPower(Rational scale, int exponent, DivisorClass base);
};

/// Human-readable rendering, terms in storage order. Examples:
/// "20·lambda1 - 2·delta0 - 4·delta_1", "1/2·psi_1 + delta0^{x1,x2}".
std::string format_class(const DivisorClass& c);
std::string format_symbol(const BasisSymbol& s, int n);
std::string format_formal_power(const FormalPower& p);

}  // namespace mbar
