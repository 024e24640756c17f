#pragma once

// Exact scalar arithmetic. Rational is GMP's canonicalizing mpq wrapper:
// always reduced, denominator > 0.

#include <gmpxx.h>
#include <cassert>
#include <cstdint>
#include <string>

namespace yangx {

using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
    assert(q != 0);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }

inline Rational rat_pow(const Rational& a, long e) {
    if (e < 0) {
        assert(!is_zero(a));
        return 1 / rat_pow(a, -e);
    }
    Rational r = 1, b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// binom(n, k) for n >= 0
inline Rational rat_binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return Rational(b);
}

inline std::string rat_str(const Rational& a) { return a.get_str(); }

// Q(sqrt(2)): a + b*s with s^2 = 2. Scalars of the rank-1 orthogonal
// low-rank map land here; everything checked must come back to b == 0 form
// or cancel entirely.
struct QuadExt {
    Rational a, b;

    QuadExt() : a(0), b(0) {}
    QuadExt(const Rational& a_) : a(a_), b(0) {}
    QuadExt(const Rational& a_, const Rational& b_) : a(a_), b(b_) {}

    static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    QuadExt operator+(const QuadExt& o) const { return QuadExt(a + o.a, b + o.b); }
    QuadExt operator-(const QuadExt& o) const { return QuadExt(a - o.a, b - o.b); }
    QuadExt operator-() const { return QuadExt(-a, -b); }
    QuadExt operator*(const QuadExt& o) const {
        return QuadExt(a * o.a + 2 * b * o.b, a * o.b + b * o.a);
    }
    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    QuadExt inv() const {
        // (a + b s)^-1 = (a - b s) / (a^2 - 2 b^2); the norm vanishes only at 0
        Rational nrm = a * a - 2 * b * b;
        assert(sgn(nrm) != 0);
        return QuadExt(a / nrm, -b / nrm);
    }

    std::string str() const {
        if (sgn(b) == 0) return a.get_str();
        std::string s = a.get_str() + (sgn(b) >= 0 ? "+" : "") + b.get_str() + "*s";
        return s;
    }
};

inline QuadExt operator*(const Rational& c, const QuadExt& x) { return QuadExt(c * x.a, c * x.b); }

// Coefficient adapters so generic code can scale by Rational uniformly.
inline Rational coeff_from_rational(const Rational& c, const Rational*) { return c; }
inline QuadExt coeff_from_rational(const Rational& c, const QuadExt*) { return QuadExt(c); }

} // namespace yangx
