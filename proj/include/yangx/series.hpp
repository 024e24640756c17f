#pragma once

// Truncated series in u^-1 and bivariate (u,v)-expansions, generic over a
// ring policy. A policy supplies Elem plus zero/one/add/sub/neg/mul/scal/
// raw_zero/normalize/str. Instances: NCRing (free-algebra coefficients with
// PBW normalization), matrices over a scalar entry ring (oracle backends and
// matrix-valued series for the Gauss decomposition).

#include "yangx/engine.hpp"
#include "yangx/matrix.hpp"
#include "yangx/poly.hpp"

#include <climits>

namespace yangx {

template <class C>
struct NCRing {
    Engine<C>* eng;
    using Elem = NCPoly<C>;

    Elem zero() const { return Elem(); }
    Elem one() const { return Elem::unit(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem scal(const Elem& a, const Rational& k) const { return a.scaled_q(k); }
    bool raw_zero(const Elem& a) const { return a.raw_zero(); }
    Elem normalize(const Elem& a) const { return eng->normal_order(a); }
    std::string str(const Elem& a) const { return a.str(); }
};

using NCRingQ = NCRing<RatC>;
using NCRingS = NCRing<QuadExt>;

struct ScalarRingQ {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return Rational(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Rational(a - b); }
    Elem neg(const Elem& a) const { return Rational(-a); }
    Elem mul(const Elem& a, const Elem& b) const { return Rational(a * b); }
    Elem scal(const Elem& a, const Rational& k) const { return Rational(a * k); }
    bool raw_zero(const Elem& a) const { return yangx::is_zero(a); }
    Elem normalize(const Elem& a) const { return a; }
    std::string str(const Elem& a) const { return rat_str(a); }
};

struct ScalarRingRF {
    using Elem = RationalFunction;
    Elem zero() const { return RationalFunction(); }
    Elem one() const { return RationalFunction(Rational(1)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem scal(const Elem& a, const Rational& k) const { return a * k; }
    bool raw_zero(const Elem& a) const { return a.is_zero(); }
    Elem normalize(const Elem& a) const { return a; }
    std::string str(const Elem& a) const { return a.str(); }
};

// m x m matrices whose entries live in an entry ring ER. DMat is used for
// storage and entrywise +/- only; products go through ER so the entry type
// needs no scalar constructors.
template <class ER>
struct MatRingOver {
    ER er;
    int m = 0;
    using Elem = DMat<typename ER::Elem>;

    MatRingOver() = default;
    MatRingOver(const ER& e, int m_) : er(e), m(m_) {}

    Elem zero() const { return Elem(m, m); }
    Elem one() const {
        Elem e(m, m);
        for (int i = 1; i <= m; ++i) e.at(i, i) = er.one();
        return e;
    }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const {
        assert(a.cols == b.rows);
        Elem r(a.rows, b.cols);
        for (int i = 1; i <= a.rows; ++i)
            for (int k = 1; k <= a.cols; ++k) {
                const auto& v = a.at(i, k);
                if (er.raw_zero(v)) continue;
                for (int j = 1; j <= b.cols; ++j) {
                    if (er.raw_zero(b.at(k, j))) continue;
                    r.at(i, j) = er.add(r.at(i, j), er.mul(v, b.at(k, j)));
                }
            }
        return r;
    }
    Elem scal(const Elem& a, const Rational& k) const {
        Elem r = a;
        for (auto& x : r.a) x = er.scal(x, k);
        return r;
    }
    bool raw_zero(const Elem& a) const {
        for (const auto& x : a.a)
            if (!er.raw_zero(x)) return false;
        return true;
    }
    Elem normalize(const Elem& a) const {
        Elem r = a;
        for (auto& x : r.a) x = er.normalize(x);
        return r;
    }
    std::string str(const Elem& a) const {
        std::string s = "[";
        for (int i = 1; i <= a.rows; ++i) {
            if (i > 1) s += "; ";
            for (int j = 1; j <= a.cols; ++j) {
                if (j > 1) s += ", ";
                s += er.str(a.at(i, j));
            }
        }
        return s + "]";
    }
};

using QMatRing = MatRingOver<ScalarRingQ>;
using RFMatRing = MatRingOver<ScalarRingRF>;
template <class C>
using NCMatRing = MatRingOver<NCRing<C>>;

// ---------------------------------------------------------------- USeries

// a_0 + a_1 u^-1 + ... + a_K u^-K, exact through order K
template <class R>
struct USeries {
    std::vector<typename R::Elem> c;
    int K() const { return (int)c.size() - 1; }
    const typename R::Elem& at(int r) const {
        assert(r >= 0 && r <= K());
        return c[r];
    }
};

template <class R>
USeries<R> us_zero(const R& ring, int K) {
    USeries<R> s;
    s.c.assign(K + 1, ring.zero());
    return s;
}
template <class R>
USeries<R> us_one(const R& ring, int K) {
    USeries<R> s = us_zero(ring, K);
    s.c[0] = ring.one();
    return s;
}
template <class R>
USeries<R> us_add(const R& ring, const USeries<R>& a, const USeries<R>& b) {
    assert(a.K() == b.K());
    USeries<R> s = a;
    for (int r = 0; r <= a.K(); ++r) s.c[r] = ring.add(s.c[r], b.c[r]);
    return s;
}
template <class R>
USeries<R> us_sub(const R& ring, const USeries<R>& a, const USeries<R>& b) {
    assert(a.K() == b.K());
    USeries<R> s = a;
    for (int r = 0; r <= a.K(); ++r) s.c[r] = ring.sub(s.c[r], b.c[r]);
    return s;
}
template <class R>
USeries<R> us_neg(const R& ring, const USeries<R>& a) {
    USeries<R> s = a;
    for (auto& x : s.c) x = ring.neg(x);
    return s;
}
template <class R>
USeries<R> us_scal(const R& ring, const USeries<R>& a, const Rational& k) {
    USeries<R> s = a;
    for (auto& x : s.c) x = ring.scal(x, k);
    return s;
}
template <class R>
USeries<R> us_mul(const R& ring, const USeries<R>& a, const USeries<R>& b) {
    assert(a.K() == b.K());
    USeries<R> s = us_zero(ring, a.K());
    for (int r = 0; r <= a.K(); ++r)
        for (int p = 0; p <= r; ++p) s.c[r] = ring.add(s.c[r], ring.mul(a.c[p], b.c[r - p]));
    return s;
}

// two-sided inverse of a series with constant term 1 (raw identity)
template <class R>
USeries<R> us_inv(const R& ring, const USeries<R>& a) {
    assert(ring.raw_zero(ring.sub(a.c[0], ring.one())));
    USeries<R> b = us_one(ring, a.K());
    for (int r = 1; r <= a.K(); ++r) {
        auto acc = ring.zero();
        for (int p = 1; p <= r; ++p) acc = ring.add(acc, ring.mul(a.c[p], b.c[r - p]));
        b.c[r] = ring.neg(acc);
    }
    return b;
}

// a(e*u + d), e != 0: substitution is exact order by order, since
// (e u + d)^-r only feeds orders >= r.
template <class R>
USeries<R> us_subst_linear(const R& ring, const USeries<R>& a, const Rational& e, const Rational& d) {
    assert(!yangx::is_zero(e));
    const int K = a.K();
    USeries<R> s = us_zero(ring, K);
    s.c[0] = a.c[0];
    Rational me = -d / e;
    for (int r = 1; r <= K; ++r) {
        if (ring.raw_zero(a.c[r])) continue;
        // (eu+d)^-r = e^-r sum_m binom(r-1+m, m) (-d/e)^m u^(-r-m)
        Rational er = rat_pow(e, -r);
        for (int m = 0; r + m <= K; ++m) {
            Rational cf = er * rat_binom(r - 1 + m, m) * (m == 0 ? Rational(1) : rat_pow(me, m));
            if (yangx::is_zero(cf)) continue;
            s.c[r + m] = ring.add(s.c[r + m], ring.scal(a.c[r], cf));
        }
    }
    return s;
}
template <class R>
USeries<R> us_shift(const R& ring, const USeries<R>& a, const Rational& d) {
    return us_subst_linear(ring, a, Rational(1), d); // a(u + d)
}

// a(c*u): pure rescale, coefficient r picks up c^-r. Kept separate from
// us_shift because the two do not commute: scale-then-shift by d equals
// subst(c, c*d), shift-then-scale equals subst(c, d).
template <class R>
USeries<R> us_scale_var(const R& ring, const USeries<R>& a, const Rational& c) {
    return us_subst_linear(ring, a, c, Rational(0));
}

// drop orders < lo (e.g. lo = 2 gives the tail e(u) - e^(1) u^-1)
template <class R>
USeries<R> us_tail(const R& ring, const USeries<R>& a, int lo) {
    USeries<R> s = a;
    for (int r = 0; r < lo && r <= a.K(); ++r) s.c[r] = ring.zero();
    return s;
}

template <class R>
bool us_raw_zero(const R& ring, const USeries<R>& a) {
    for (const auto& x : a.c)
        if (!ring.raw_zero(x)) return false;
    return true;
}

template <class R>
USeries<R> us_nf(const R& ring, const USeries<R>& a) {
    USeries<R> s = a;
    for (auto& x : s.c) x = ring.normalize(x);
    return s;
}

// coefficients of a - b all normalize to zero
template <class R>
bool us_nf_equal(const R& ring, const USeries<R>& a, const USeries<R>& b, int* bad = nullptr) {
    assert(a.K() == b.K());
    for (int r = 0; r <= a.K(); ++r) {
        if (ring.raw_zero(ring.normalize(ring.sub(a.c[r], b.c[r])))) continue;
        if (bad) *bad = r;
        return false;
    }
    return true;
}

// --------------------------------------------------------------- BiSeries

// Sparse doubly-infinite exponent grid with an exactness region: the stored
// value at (eu, ev) equals the true expansion coefficient whenever
// eu >= Au, ev >= Av and eu + ev >= S. Pu/Pv bound the exponents where the
// true function can have support at all (used when multiplying by a
// truncated univariate series). Compares must stay inside the region.
constexpr long BS_NONE = -100000; // "no constraint" sentinel for Au/Av/S

template <class R>
struct BiSeries {
    std::map<std::pair<int, int>, typename R::Elem> t;
    long Au = BS_NONE, Av = BS_NONE, S = 2 * BS_NONE;
    int Pu = 0, Pv = 0;

    bool valid_at(int eu, int ev) const { return eu >= Au && ev >= Av && eu + ev >= S; }
};

template <class R>
void bs_put(const R& ring, BiSeries<R>& b, int eu, int ev, const typename R::Elem& x) {
    if (ring.raw_zero(x)) return;
    auto key = std::make_pair(eu, ev);
    auto it = b.t.find(key);
    if (it == b.t.end()) {
        b.t.emplace(key, x);
    } else {
        it->second = ring.add(it->second, x);
        if (ring.raw_zero(it->second)) b.t.erase(it);
    }
}

template <class R>
BiSeries<R> bs_zero(const R&) {
    return BiSeries<R>();
}

// place a univariate series as a function of u (resp. v)
template <class R>
BiSeries<R> bs_from_u(const R& ring, const USeries<R>& a) {
    BiSeries<R> b;
    for (int r = 0; r <= a.K(); ++r) bs_put(ring, b, -r, 0, a.c[r]);
    b.Au = -a.K();
    b.Pu = 0;
    b.Pv = 0;
    return b;
}
template <class R>
BiSeries<R> bs_from_v(const R& ring, const USeries<R>& a) {
    BiSeries<R> b;
    for (int r = 0; r <= a.K(); ++r) bs_put(ring, b, 0, -r, a.c[r]);
    b.Av = -a.K();
    b.Pu = 0;
    b.Pv = 0;
    return b;
}

// a(u) * b(v): word order follows u_first
template <class R>
BiSeries<R> bs_cross(const R& ring, const USeries<R>& a, const USeries<R>& b, bool u_first = true) {
    BiSeries<R> r;
    for (int p = 0; p <= a.K(); ++p) {
        if (ring.raw_zero(a.c[p])) continue;
        for (int q = 0; q <= b.K(); ++q) {
            if (ring.raw_zero(b.c[q])) continue;
            bs_put(ring, r, -p, -q, u_first ? ring.mul(a.c[p], b.c[q]) : ring.mul(b.c[q], a.c[p]));
        }
    }
    r.Au = -a.K();
    r.Av = -b.K();
    r.Pu = 0;
    r.Pv = 0;
    return r;
}

// [a(u), b(v)]
template <class R>
BiSeries<R> bs_comm(const R& ring, const USeries<R>& a, const USeries<R>& b) {
    BiSeries<R> r;
    for (int p = 0; p <= a.K(); ++p) {
        if (ring.raw_zero(a.c[p])) continue;
        for (int q = 0; q <= b.K(); ++q) {
            if (ring.raw_zero(b.c[q])) continue;
            bs_put(ring, r, -p, -q, ring.sub(ring.mul(a.c[p], b.c[q]), ring.mul(b.c[q], a.c[p])));
        }
    }
    r.Au = -a.K();
    r.Av = -b.K();
    r.Pu = 0;
    r.Pv = 0;
    return r;
}

// (a(u) - a(v)) / (u - v) = - sum_{p,q >= 0} a^(p+q+1) u^(-p-1) v^(-q-1)
template <class R>
BiSeries<R> bs_divided_difference(const R& ring, const USeries<R>& a) {
    BiSeries<R> r;
    const int K = a.K();
    for (int p = 0; p + 1 <= K; ++p)
        for (int q = 0; p + q + 1 <= K; ++q) bs_put(ring, r, -p - 1, -q - 1, ring.neg(a.c[p + q + 1]));
    r.S = -(K + 1);
    r.Pu = -1;
    r.Pv = -1;
    return r;
}

template <class R>
BiSeries<R> bs_add(const R& ring, const BiSeries<R>& a, const BiSeries<R>& b) {
    BiSeries<R> r = a;
    for (const auto& [k, x] : b.t) bs_put(ring, r, k.first, k.second, x);
    r.Au = std::max(a.Au, b.Au);
    r.Av = std::max(a.Av, b.Av);
    r.S = std::max(a.S, b.S);
    r.Pu = std::max(a.Pu, b.Pu);
    r.Pv = std::max(a.Pv, b.Pv);
    return r;
}
template <class R>
BiSeries<R> bs_sub(const R& ring, const BiSeries<R>& a, const BiSeries<R>& b) {
    BiSeries<R> r = a;
    for (const auto& [k, x] : b.t) bs_put(ring, r, k.first, k.second, ring.neg(x));
    r.Au = std::max(a.Au, b.Au);
    r.Av = std::max(a.Av, b.Av);
    r.S = std::max(a.S, b.S);
    r.Pu = std::max(a.Pu, b.Pu);
    r.Pv = std::max(a.Pv, b.Pv);
    return r;
}
template <class R>
BiSeries<R> bs_scal(const R& ring, const BiSeries<R>& a, const Rational& k) {
    BiSeries<R> r;
    r.Au = a.Au;
    r.Av = a.Av;
    r.S = a.S;
    r.Pu = a.Pu;
    r.Pv = a.Pv;
    if (yangx::is_zero(k)) return r;
    for (const auto& [key, x] : a.t) r.t.emplace(key, ring.scal(x, k));
    return r;
}

// multiply by k * u^du * v^dv
template <class R>
BiSeries<R> bs_monom(const R& ring, const BiSeries<R>& a, int du, int dv, const Rational& k = Rational(1)) {
    BiSeries<R> r;
    r.Au = a.Au + du;
    r.Av = a.Av + dv;
    r.S = a.S + du + dv;
    r.Pu = a.Pu + du;
    r.Pv = a.Pv + dv;
    if (yangx::is_zero(k)) {
        r.Au = BS_NONE;
        r.Av = BS_NONE;
        r.S = 2 * BS_NONE;
        return r;
    }
    for (const auto& [key, x] : a.t)
        r.t.emplace(std::make_pair(key.first + du, key.second + dv), yangx::is_one(k) ? x : ring.scal(x, k));
    return r;
}

// h(u) * B from the left (or right): contributions from orders beyond h's
// truncation must fall outside B's true u-support, which shrinks the valid
// region by Pu - K(h).
template <class R>
BiSeries<R> bs_mul_u(const R& ring, const USeries<R>& h, const BiSeries<R>& a, bool h_left) {
    BiSeries<R> r;
    const int Kh = h.K();
    for (int p = 0; p <= Kh; ++p) {
        if (ring.raw_zero(h.c[p])) continue;
        for (const auto& [key, x] : a.t)
            bs_put(ring, r, key.first - p, key.second, h_left ? ring.mul(h.c[p], x) : ring.mul(x, h.c[p]));
    }
    r.Au = std::max(a.Au, (long)a.Pu - Kh);
    r.Av = a.Av;
    r.S = a.S;
    r.Pu = a.Pu;
    r.Pv = a.Pv;
    return r;
}
template <class R>
BiSeries<R> bs_mul_v(const R& ring, const USeries<R>& h, const BiSeries<R>& a, bool h_left) {
    BiSeries<R> r;
    const int Kh = h.K();
    for (int p = 0; p <= Kh; ++p) {
        if (ring.raw_zero(h.c[p])) continue;
        for (const auto& [key, x] : a.t)
            bs_put(ring, r, key.first, key.second - p, h_left ? ring.mul(h.c[p], x) : ring.mul(x, h.c[p]));
    }
    r.Au = a.Au;
    r.Av = std::max(a.Av, (long)a.Pv - Kh);
    r.S = a.S;
    r.Pu = a.Pu;
    r.Pv = a.Pv;
    return r;
}

struct BsCheck {
    bool pass = true;
    int checked = 0; // stored keys inside the valid region
    int informative = 0; // doubly negative lattice points the check covers
    std::string witness;
};

// normalize every stored coefficient inside the valid region; all must
// vanish. Keys outside the region carry no information and are ignored.
// informative counts the lattice points with eu, ev <= -1 inside the valid
// region clipped to the support bounds: those positions are asserted zero
// whether or not a stored key survived cancellation there. A direction the
// series never bounded is clamped to a fixed window; callers only rely on
// the count being positive exactly when such a point exists.
template <class R>
BsCheck bs_check_zero(const R& ring, const BiSeries<R>& b) {
    BsCheck res;
    for (const auto& [key, x] : b.t) {
        if (!b.valid_at(key.first, key.second)) continue;
        ++res.checked;
        auto nf = ring.normalize(x);
        if (!ring.raw_zero(nf)) {
            res.pass = false;
            res.witness = "u^" + std::to_string(key.first) + " v^" + std::to_string(key.second) + ": " + ring.str(nf);
            return res;
        }
    }
    const long W = 64, SENT = BS_NONE / 2;
    const long umax = std::min<long>(-1, b.Pu), vmax = std::min<long>(-1, b.Pv);
    const long ulo = b.Au < SENT ? umax - (W - 1) : b.Au;
    const long vlo = b.Av < SENT ? vmax - (W - 1) : b.Av;
    long cnt = 0;
    for (long eu = ulo; eu <= umax; ++eu) {
        long lo = b.S < SENT ? vlo : std::max(vlo, b.S - eu);
        if (lo <= vmax) cnt += vmax - lo + 1;
    }
    res.informative = (int)std::min<long>(cnt, 1 << 20);
    return res;
}

} // namespace yangx
