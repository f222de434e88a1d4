#pragma once

#include <vector>

#include "mbar/divisor_class.hpp"

namespace mbar {

/// Degree data (d_1, ..., d_n) with twist m and root order r, subject to
/// r | 2g-2 and sum(d) = (2g-2) m / r. r = 1 is the untwisted case.
struct DegreeVector {
    int g;
    int n;
    std::vector<long> d;
    long m;
    int r;

    DegreeVector(int g, std::vector<long> d, long m, int r = 1);

    Rational m_over_r() const { return rat(m, r); }
    long d_of(MarkedSubset P) const;
};

/// Moriwaki divisor (8g+4) lambda1 - g delta0 - 4 sum h(g-h) delta_h on the
/// unpointed space. This is twice the Ceresa normal function square class.
DivisorClass moriwaki_class(int g);

/// 4g(g-1) psi - kappa1 - sum (2h-1)^2 delta_{g-h}^{x} on the 1-pointed
/// space; twice the Weierstrass normal function square class. Zero in genus 1.
DivisorClass weierstrass_class(int g);

/// 8 lambda1 + 4g psi - delta0 - 4 sum h delta_{g-h}^{x}; twice the Ceresa
/// class pulled to the 1-pointed space.
DivisorClass ceresa_l_class(int g);

/// Pullback of the extended diagonal theta form under the two-point
/// Weierstrass section, on the 2-pointed space.
DivisorClass two_point_delta_class(int g);

/// Closed form for the pullback of the extended theta form under the section
/// sum d_j x_j - m K, r = 1. The central formula of the library.
DivisorClass pullback_phi_closed(const DegreeVector& v);

/// r-th root variant: same formula with m replaced by m/r carried exactly.
DivisorClass variant_class(const DegreeVector& v);

/// Theta-divisor pullback for sum(d) = g-1 (theta characteristic twist).
DivisorClass harris_class(int g, int n, const std::vector<long>& d);

/// Class of the pulled-back zero section in degree 2g, kept as the unexpanded
/// formal power (1/g!) * (pullback_phi_closed(d, m=0))^g. Requires sum(d) = 0
/// and g >= 2; genus 1 lives in the genus-one subsystem.
FormalPower eliashberg_class(int g, int n, const std::vector<long>& d);

}  // namespace mbar
