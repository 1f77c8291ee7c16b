#pragma once

#include <gmpxx.h>

#include <string>

namespace qhopf {

/// Exact rational scalar.  mpq_class keeps gcd-reduced form with positive
/// denominator, which is exactly the canonical form required here.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    long n = e > 0 ? e : -e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// Ordinary binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace qhopf
