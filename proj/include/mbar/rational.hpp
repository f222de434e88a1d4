#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbar {

/// Exact rational coefficient. All core arithmetic is over mpq; no floating
/// point anywhere in the library.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms, q > 0.
inline std::string rat_str(const Rational& q) {
    return q.get_str();
}

/// Parses "p" or "p/q" (decimal integers, optional sign on p).
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw std::invalid_argument("bad rational literal: " + s);
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline mpz_class factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

}  // namespace mbar
