#pragma once

// Univariate polynomials and rational functions over Q, exact.
// Poly: dense coefficient vector, no trailing zeros, deg(0) = -1.
// RationalFunction: num/den with gcd(num, den) = 1 and monic den;
// zero is 0/1.

#include "yangx/rational.hpp"

#include <vector>

namespace yangx {

struct Poly {
    std::vector<Rational> c; // c[i] multiplies u^i

    Poly() = default;
    explicit Poly(const Rational& a) {
        if (!yangx::is_zero(a)) c.push_back(a);
    }
    static Poly var(); // u
    static Poly from_coeffs(std::vector<Rational> v);

    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const Rational& lead() const {
        assert(!c.empty());
        return c.back();
    }
    Rational coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Rational(0); }

    void normalize(); // strip trailing zeros

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& k) const;
    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const;
    Poly shifted(const Rational& s) const; // p(u + s)
    std::string str() const;
};

// division with remainder; b != 0
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_gcd(Poly a, Poly b); // monic gcd (or 0)

struct RationalFunction {
    Poly num, den; // den monic, gcd = 1; zero: num = 0, den = 1

    RationalFunction() : den(Poly(Rational(1))) {}
    RationalFunction(const Poly& n, const Poly& d) { assign(n, d); }
    explicit RationalFunction(const Rational& a) : num(Poly(a)), den(Poly(Rational(1))) {}
    static RationalFunction var() { return RationalFunction(Poly::var(), Poly(Rational(1))); }

    void assign(Poly n, Poly d); // reduces and normalizes

    bool is_zero() const { return num.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator*(const Rational& k) const;
    RationalFunction inv() const;
    bool operator==(const RationalFunction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    bool defined_at(const Rational& x) const { return !yangx::is_zero(den.eval(x)); }
    Rational eval(const Rational& x) const;
    RationalFunction shifted(const Rational& s) const; // f(u + s)
    std::string str() const;
};

// Laurent expansion at u = infinity in powers of u^-1, orders 0..K.
// Requires deg(num) <= deg(den) so no positive powers appear.
std::vector<Rational> expand_at_infinity(const RationalFunction& f, int K);

} // namespace yangx
