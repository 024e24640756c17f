#include "yangx/poly.hpp"

#include <sstream>

namespace yangx {

Poly Poly::var() {
    Poly p;
    p.c = {Rational(0), Rational(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> v) {
    Poly p;
    p.c = std::move(v);
    p.normalize();
    return p;
}

void Poly::normalize() {
    while (!c.empty() && yangx::is_zero(c.back())) c.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
}

Poly Poly::operator*(const Rational& k) const {
    if (yangx::is_zero(k)) return Poly();
    Poly r = *this;
    for (auto& x : r.c) x *= k;
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

Poly Poly::shifted(const Rational& s) const {
    // Horner: p(u+s) = (...((c_d)(u+s) + c_{d-1})(u+s) + ...) + c_0
    Poly r;
    for (size_t i = c.size(); i-- > 0;) {
        Poly t;
        t.c.assign(r.c.size() + 1, Rational(0));
        for (size_t j = 0; j < r.c.size(); ++j) {
            t.c[j + 1] += r.c[j];
            t.c[j] += r.c[j] * s;
        }
        r = std::move(t);
        if (r.c.empty()) r.c.push_back(c[i]);
        else r.c[0] += c[i];
        r.normalize();
    }
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (yangx::is_zero(c[i])) continue;
        if (!first) os << " + ";
        os << c[i].get_str();
        if (i >= 1) os << "*u";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    assert(!b.is_zero());
    q = Poly();
    r = a;
    if (a.deg() < b.deg()) return;
    q.c.assign(a.deg() - b.deg() + 1, Rational(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int d = r.deg() - b.deg();
        Rational f = r.lead() / b.lead();
        q.c[d] = f;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + d] -= f * b.c[i];
        r.normalize();
    }
    q.normalize();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rational inv = 1 / a.lead();
        a = a * inv;
    }
    return a;
}

void RationalFunction::assign(Poly n, Poly d) {
    assert(!d.is_zero());
    if (n.is_zero()) {
        num = Poly();
        den = Poly(Rational(1));
        return;
    }
    Poly g = poly_gcd(n, d);
    if (g.deg() > 0) {
        Poly q, r;
        poly_divmod(n, g, q, r);
        assert(r.is_zero());
        n = q;
        poly_divmod(d, g, q, r);
        assert(r.is_zero());
        d = q;
    }
    Rational lc = 1 / d.lead();
    num = n * lc;
    den = d * lc;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num * o.den + o.num * den, den * o.den);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num * o.den - o.num * den, den * o.den);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num = -r.num;
    return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num * o.num, den * o.den);
}

RationalFunction RationalFunction::operator*(const Rational& k) const {
    if (yangx::is_zero(k)) return RationalFunction();
    RationalFunction r = *this;
    r.num = r.num * k;
    return r;
}

RationalFunction RationalFunction::inv() const {
    assert(!is_zero());
    return RationalFunction(den, num);
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den.eval(x);
    assert(!yangx::is_zero(d));
    return num.eval(x) / d;
}

RationalFunction RationalFunction::shifted(const Rational& s) const {
    RationalFunction r;
    r.num = num.shifted(s);
    r.den = den.shifted(s);
    // monic stays monic under shift and the gcd stays trivial
    return r;
}

std::string RationalFunction::str() const {
    if (is_zero()) return "0";
    if (den.deg() == 0) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

std::vector<Rational> expand_at_infinity(const RationalFunction& f, int K) {
    assert(K >= 0);
    std::vector<Rational> a(K + 1, Rational(0));
    if (f.is_zero()) return a;
    assert(f.num.deg() <= f.den.deg() && "positive powers of u at infinity");
    int d = f.den.deg();
    // num = den * sum a_k u^-k: match coefficients of u^(d-k)
    for (int k = 0; k <= K; ++k) {
        Rational s = f.num.coeff(d - k);
        for (int m = 0; m < k; ++m) s -= f.den.coeff(d - k + m) * a[m];
        a[k] = s; // den is monic so no division
    }
    return a;
}

} // namespace yangx
