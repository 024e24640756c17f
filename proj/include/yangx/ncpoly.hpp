#pragma once

// Words in the generators t_ij^(r) and noncommutative polynomials over an
// exact coefficient field (Rational or QuadExt).
//
// A generator is packed into 32 bits as (r, tag, i, j); the packed-integer
// order is the PBW order: superscript r first, then the algebra-copy tag,
// then row, then column. Filtration degree of t^(r) is r - 1. Tag 0xfe
// marks central scalar symbols (the free coefficients of a series f(u)),
// which commute with everything.

#include "yangx/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace yangx {

struct GenSym {
    uint32_t packed = 0;

    GenSym() = default;
    GenSym(int r, int i, int j, int tag = 0) {
        assert(r >= 0 && r <= 255 && i >= 0 && i <= 255 && j >= 0 && j <= 255 && tag >= 0 && tag <= 255);
        packed = ((uint32_t)r << 24) | ((uint32_t)tag << 16) | ((uint32_t)i << 8) | (uint32_t)j;
    }
    static GenSym central(int a) { return GenSym(a, 0, 0, 0xfe); }

    int r() const { return (int)(packed >> 24); }
    int tag() const { return (int)((packed >> 16) & 0xff); }
    int i() const { return (int)((packed >> 8) & 0xff); }
    int j() const { return (int)(packed & 0xff); }
    bool is_central() const { return tag() == 0xfe; }
    int degree() const { return r() - 1; } // filtration degree

    bool operator<(const GenSym& o) const { return packed < o.packed; }
    bool operator==(const GenSym& o) const { return packed == o.packed; }
    bool operator!=(const GenSym& o) const { return packed != o.packed; }

    std::string str() const {
        if (is_central()) return "f" + std::to_string(r());
        std::string s = "t";
        if (tag()) s += "'";
        return s + "[" + std::to_string(i()) + "," + std::to_string(j()) + "]^(" + std::to_string(r()) + ")";
    }
};

constexpr int WORD_CAP = 20;

struct Word {
    uint8_t n = 0;
    std::array<uint32_t, WORD_CAP> a{};

    int size() const { return n; }
    bool empty() const { return n == 0; }
    GenSym at(int t) const {
        GenSym g;
        g.packed = a[t];
        return g;
    }
    void push(GenSym g) {
        assert(n < WORD_CAP);
        a[n++] = g.packed;
    }

    static Word one() { return Word(); }
    static Word gen(GenSym g) {
        Word w;
        w.push(g);
        return w;
    }

    Word concat(const Word& o) const {
        assert(n + o.n <= WORD_CAP);
        Word w = *this;
        for (int t = 0; t < o.n; ++t) w.a[w.n++] = o.a[t];
        return w;
    }

    // replace letters [pos, pos+2) by the letters of mid
    Word splice2(int pos, const Word& mid) const {
        assert(pos + 2 <= n && n - 2 + mid.n <= WORD_CAP);
        Word w;
        for (int t = 0; t < pos; ++t) w.a[w.n++] = a[t];
        for (int t = 0; t < mid.n; ++t) w.a[w.n++] = mid.a[t];
        for (int t = pos + 2; t < n; ++t) w.a[w.n++] = a[t];
        return w;
    }

    // replace the letter at pos by the letters of mid
    Word splice1(int pos, const Word& mid) const {
        assert(pos < n && n - 1 + mid.n <= WORD_CAP);
        Word w;
        for (int t = 0; t < pos; ++t) w.a[w.n++] = a[t];
        for (int t = 0; t < mid.n; ++t) w.a[w.n++] = mid.a[t];
        for (int t = pos + 1; t < n; ++t) w.a[w.n++] = a[t];
        return w;
    }

    int degree() const {
        int d = 0;
        for (int t = 0; t < n; ++t) d += at(t).degree();
        return d;
    }

    // first position with a[p] > a[p+1], or -1 when weakly increasing
    int first_inversion() const {
        for (int t = 0; t + 1 < n; ++t)
            if (a[t] > a[t + 1]) return t;
        return -1;
    }
    bool sorted() const { return first_inversion() < 0; }

    bool operator<(const Word& o) const {
        int m = std::min(n, o.n);
        for (int t = 0; t < m; ++t)
            if (a[t] != o.a[t]) return a[t] < o.a[t];
        return n < o.n;
    }
    bool operator==(const Word& o) const {
        if (n != o.n) return false;
        for (int t = 0; t < n; ++t)
            if (a[t] != o.a[t]) return false;
        return true;
    }

    std::string str() const {
        if (n == 0) return "1";
        std::string s;
        for (int t = 0; t < n; ++t) {
            if (t) s += ".";
            s += at(t).str();
        }
        return s;
    }
};

template <class C>
struct NCPoly {
    std::map<Word, C> terms;

    static NCPoly zero() { return NCPoly(); }
    static NCPoly unit(const C& c = C(Rational(1))) {
        NCPoly p;
        if (!c.is_zero()) p.terms[Word::one()] = c;
        return p;
    }
    static NCPoly gen(GenSym g) {
        NCPoly p;
        p.terms[Word::gen(g)] = C(Rational(1));
        return p;
    }

    bool raw_zero() const { return terms.empty(); }

    void add_term(const Word& w, const C& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    NCPoly operator+(const NCPoly& o) const {
        NCPoly r = *this;
        for (const auto& [w, c] : o.terms) r.add_term(w, c);
        return r;
    }
    NCPoly operator-(const NCPoly& o) const {
        NCPoly r = *this;
        for (const auto& [w, c] : o.terms) r.add_term(w, -c);
        return r;
    }
    NCPoly operator-() const {
        NCPoly r = *this;
        for (auto& [w, c] : r.terms) c = -c;
        return r;
    }
    NCPoly operator*(const NCPoly& o) const {
        NCPoly r;
        for (const auto& [w1, c1] : terms)
            for (const auto& [w2, c2] : o.terms) r.add_term(w1.concat(w2), c1 * c2);
        return r;
    }
    NCPoly scaled(const C& k) const {
        NCPoly r;
        if (k.is_zero()) return r;
        for (const auto& [w, c] : terms) {
            C v = c * k;
            if (!v.is_zero()) r.terms[w] = v;
        }
        return r;
    }
    NCPoly scaled_q(const Rational& k) const { return scaled(C(k)); }

    bool operator==(const NCPoly& o) const { return terms == o.terms; }

    int max_degree() const {
        int d = -1;
        for (const auto& [w, c] : terms) d = std::max(d, w.degree());
        return d;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + w.str();
        }
        return s;
    }
};

// Rational lacks .is_zero()/.str() members; wrap it so NCPoly<RatC> works
// with the same surface as QuadExt.
struct RatC {
    Rational v;
    RatC() : v(0) {}
    RatC(const Rational& x) : v(x) {}
    bool is_zero() const { return sgn(v) == 0; }
    bool is_rational() const { return true; }
    RatC operator+(const RatC& o) const { return RatC(Rational(v + o.v)); }
    RatC operator-(const RatC& o) const { return RatC(Rational(v - o.v)); }
    RatC operator-() const { return RatC(Rational(-v)); }
    RatC operator*(const RatC& o) const { return RatC(Rational(v * o.v)); }
    bool operator==(const RatC& o) const { return v == o.v; }
    bool operator!=(const RatC& o) const { return v != o.v; }
    std::string str() const { return v.get_str(); }
};

} // namespace yangx
