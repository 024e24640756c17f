#include "doctest.h"

#include "yangx/engine.hpp"

#include <random>

using namespace yangx;

namespace {

// Independent closed form for [t_ij^(r), t_kl^(s)], derived once by hand
// from the series relation and frozen here. The engine assembles the same
// coefficient through the bivariate expansion window; the two paths share
// no code.
template <class C>
NCPoly<C> closed_form_comm(const AlgebraContext& ctx, int r, int i, int j, int s, int k, int l) {
    auto tc = [&](int a, int b, int m) -> NCPoly<C> {
        if (m == 0) return a == b ? NCPoly<C>::unit() : NCPoly<C>::zero();
        return NCPoly<C>::gen(GenSym(m, a, b));
    };
    NCPoly<C> acc;
    for (int m = 0; m <= r - 1; ++m)
        acc = acc + tc(k, j, m) * tc(i, l, r + s - 1 - m) - tc(k, j, r + s - 1 - m) * tc(i, l, m);
    if (ctx.kind == Kind::A) return acc;
    const Rational kap = ctx.kappa();
    if (k == ctx.prime(i)) {
        for (int p = 1; p <= ctx.N; ++p)
            for (int q = 0; q <= r - 1; ++q)
                for (int c = 0; c <= q; ++c) {
                    Rational cf = ctx.theta(i, p) * rat_binom(q, c) * rat_pow(kap, q - c);
                    acc = acc - (tc(p, j, r - 1 - q) * tc(ctx.prime(p), l, s + c)).scaled_q(cf);
                }
    }
    if (l == ctx.prime(j)) {
        for (int p = 1; p <= ctx.N; ++p)
            for (int q = 0; q <= r - 1; ++q)
                for (int c = 0; c <= q; ++c) {
                    Rational cf = ctx.theta(j, p) * rat_binom(q, c) * rat_pow(kap, q - c);
                    acc = acc + (tc(k, ctx.prime(p), s + c) * tc(i, p, r - 1 - q)).scaled_q(cf);
                }
    }
    return acc;
}

GenSym random_gen(std::mt19937_64& rng, int N, int rmax) {
    std::uniform_int_distribution<int> dr(1, rmax), di(1, N);
    return GenSym(dr(rng), di(rng), di(rng));
}

// Third derivation, via the denominator-cleared form of the relation.
// D = (t_kj(u) t_il(v) - t_kj(v) t_il(u))/(u-v) is an honest series (the
// numerator vanishes at u = v); with KN the kappa numerator, the cleared
// relation reads (u-v-kappa)[t(u), t(v)] = (u-v-kappa) D - KN, giving
//   C(a+1,b) = C(a,b+1) + kappa C(a,b) + E(a,b),  C(0,.) = C(.,0) = 0,
// where E(a,b) is the u^-a v^-b coefficient of the right side. Solve rows
// upward and read C(r,s). No kernel with constant shift is ever expanded.
template <class C>
NCPoly<C> cleared_recursion_comm(const AlgebraContext& ctx, int r, int i, int j, int s, int k, int l) {
    using P = NCPoly<C>;
    auto tc = [&](int a, int b, int m) -> P {
        if (m == 0) return a == b ? P::unit() : P::zero();
        return P::gen(GenSym(m, a, b));
    };
    const Rational kap = ctx.kind == Kind::A ? Rational(0) : ctx.kappa();
    const int AN = r + 1, BN = s + r + 1; // D window: eu >= -AN, ev >= -BN

    std::map<std::pair<int, int>, P> D;
    auto addD = [&](int eu, int ev, const P& w) {
        if (w.raw_zero()) return;
        auto [it, fresh] = D.try_emplace(std::make_pair(eu, ev), P::zero());
        it->second = it->second + w;
        if (it->second.raw_zero()) D.erase(it);
    };
    for (int p = 0; p <= AN - 1; ++p)
        for (int a2 = 0; p + 1 + a2 <= AN; ++a2)
            for (int b2 = 0; p - b2 >= -BN; ++b2) {
                addD(-p - 1 - a2, p - b2, tc(k, j, a2) * tc(i, l, b2));
                addD(-p - 1 - a2, p - b2, -(tc(k, j, b2) * tc(i, l, a2)));
            }
    for (auto it = D.begin(); it != D.end();) {
        if (it->first.second >= 0) {
            REQUIRE(it->second.raw_zero());
            it = D.erase(it);
        } else {
            ++it;
        }
    }
    auto getD = [&](int eu, int ev) -> P {
        auto it = D.find({eu, ev});
        return it == D.end() ? P::zero() : it->second;
    };
    auto KN = [&](int a, int b) -> P {
        P acc;
        if (ctx.kind == Kind::A) return acc;
        if (k == ctx.prime(i))
            for (int p = 1; p <= ctx.N; ++p)
                acc = acc + (tc(p, j, a) * tc(ctx.prime(p), l, b)).scaled_q(ctx.theta(i, p));
        if (l == ctx.prime(j))
            for (int p = 1; p <= ctx.N; ++p)
                acc = acc - (tc(k, ctx.prime(p), b) * tc(i, p, a)).scaled_q(ctx.theta(j, p));
        return acc;
    };

    // rows C[a][b]; row a is needed at columns s..s+r-a
    std::vector<std::vector<P>> rows(r + 1, std::vector<P>(s + r + 1));
    for (int a = 0; a < r; ++a)
        for (int b = 1; b <= s + r - 1 - a; ++b) {
            P E = getD(-a - 1, -b) - getD(-a, -b - 1) - getD(-a, -b).scaled_q(kap) - KN(a, b);
            rows[a + 1][b] = rows[a][b + 1] + rows[a][b].scaled_q(kap) + E;
        }
    return rows[r][s];
}

} // namespace

TEST_CASE("gensym packing matches (r, tag, i, j) order and roundtrips") {
    GenSym g(3, 2, 7, 1);
    CHECK(g.r() == 3);
    CHECK(g.tag() == 1);
    CHECK(g.i() == 2);
    CHECK(g.j() == 7);
    CHECK(g.degree() == 2);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, 9);
    for (int t = 0; t < 500; ++t) {
        GenSym a(d(rng) + 1, d(rng), d(rng), d(rng) % 2), b(d(rng) + 1, d(rng), d(rng), d(rng) % 2);
        auto key = [](const GenSym& g) {
            return std::make_tuple(g.r(), g.tag(), g.i(), g.j());
        };
        CHECK((a < b) == (key(a) < key(b)));
    }
    CHECK(GenSym::central(2).is_central());
    CHECK(!g.is_central());
}

TEST_CASE("word concat, splice, degree, inversions") {
    GenSym a(1, 1, 2), b(2, 1, 1), c(1, 3, 3);
    Word w = Word::gen(b).concat(Word::gen(a)); // b.a, inverted (b > a)
    CHECK(w.size() == 2);
    CHECK(w.degree() == 1);
    CHECK(w.first_inversion() == 0);
    Word s = Word::gen(a).concat(Word::gen(b));
    CHECK(s.sorted());

    Word mid = Word::gen(c).concat(Word::gen(c));
    Word sp = w.splice2(0, mid);
    CHECK(sp.size() == 2);
    CHECK(sp.at(0) == c);
    Word w3 = s.concat(Word::gen(c));
    Word sp2 = w3.splice2(1, Word::one()); // drop letters 1,2
    CHECK(sp2.size() == 1);
    CHECK(sp2.at(0) == a);
}

TEST_CASE("ncpoly ring ops") {
    using P = NCPoly<RatC>;
    GenSym x(1, 1, 2), y(1, 2, 1), z(2, 1, 1);
    P px = P::gen(x), py = P::gen(y), pz = P::gen(z);
    CHECK(((px + py) * pz == px * pz + py * pz));
    CHECK((px * (py + pz) == px * py + px * pz));
    CHECK(((px * py) * pz == px * (py * pz)));
    CHECK((px - px).raw_zero());
    CHECK((px.scaled_q(rat(2, 3)) + px.scaled_q(rat(1, 3)) == px));
    CHECK(P::unit() * px == px);
    CHECK((px * py).max_degree() == 0);
    CHECK((pz * pz).max_degree() == 2);
}

TEST_CASE("commutator window assembly matches frozen closed form") {
    auto run = [](const AlgebraContext& ctx, int rmax, int quad_samples) {
        Engine<RatC> eng(ctx);
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<int> di(1, ctx.N);
        int exhaustive = ctx.N <= 4;
        auto check_one = [&](int r, int i, int j, int s, int k, int l) {
            NCPoly<RatC> got = eng.commutator_coeff(GenSym(r, i, j), GenSym(s, k, l));
            NCPoly<RatC> want = closed_form_comm<RatC>(ctx, r, i, j, s, k, l);
            CHECK(got == want);
        };
        for (int r = 1; r <= rmax; ++r)
            for (int s = 1; s <= rmax; ++s) {
                if (exhaustive) {
                    for (int i = 1; i <= ctx.N; ++i)
                        for (int j = 1; j <= ctx.N; ++j)
                            for (int k = 1; k <= ctx.N; ++k)
                                for (int l = 1; l <= ctx.N; ++l) check_one(r, i, j, s, k, l);
                } else {
                    for (int t = 0; t < quad_samples; ++t) check_one(r, di(rng), di(rng), s, di(rng), di(rng));
                }
            }
    };
    run(AlgebraContext::make(Kind::A, 2), 2, 0);
    run(AlgebraContext::make(Kind::B, 1), 3, 0);
    run(AlgebraContext::make(Kind::C, 2), 2, 0);
    run(AlgebraContext::make(Kind::D, 2), 3, 0);
    run(AlgebraContext::make(Kind::D, 3), 3, 40); // N = 6: sampled
}

TEST_CASE("commutator read-off matches the cleared-recursion derivation") {
    auto run = [](const AlgebraContext& ctx, int rmax, int quad_samples) {
        Engine<RatC> eng(ctx);
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> di(1, ctx.N);
        auto check_one = [&](int r, int i, int j, int s, int k, int l) {
            CHECK(eng.commutator_coeff(GenSym(r, i, j), GenSym(s, k, l)) ==
                  cleared_recursion_comm<RatC>(ctx, r, i, j, s, k, l));
        };
        for (int r = 1; r <= rmax; ++r)
            for (int s = 1; s <= rmax; ++s) {
                if (quad_samples == 0) {
                    for (int i = 1; i <= ctx.N; ++i)
                        for (int j = 1; j <= ctx.N; ++j)
                            for (int k = 1; k <= ctx.N; ++k)
                                for (int l = 1; l <= ctx.N; ++l) check_one(r, i, j, s, k, l);
                } else {
                    for (int t = 0; t < quad_samples; ++t) check_one(r, di(rng), di(rng), s, di(rng), di(rng));
                }
            }
    };
    run(AlgebraContext::make(Kind::B, 1), 3, 0);
    run(AlgebraContext::make(Kind::A, 2), 2, 0);
    run(AlgebraContext::make(Kind::C, 2), 2, 0);
    run(AlgebraContext::make(Kind::D, 2), 2, 0);
    run(AlgebraContext::make(Kind::B, 2), 3, 30);
    run(AlgebraContext::make(Kind::D, 3), 3, 30);
}

TEST_CASE("hand-computed commutator spot values") {
    auto A2 = AlgebraContext::make(Kind::A, 2);
    Engine<RatC> ea(A2);
    using P = NCPoly<RatC>;
    auto T = [](int r, int i, int j) { return P::gen(GenSym(r, i, j)); };

    CHECK(ea.commutator_coeff(GenSym(1, 1, 1), GenSym(1, 1, 2)) == T(1, 1, 2));
    CHECK(ea.commutator_coeff(GenSym(1, 1, 2), GenSym(1, 2, 1)) == T(1, 1, 1) - T(1, 2, 2));

    auto B1 = AlgebraContext::make(Kind::B, 1);
    Engine<RatC> eb(B1);
    CHECK(eb.commutator_coeff(GenSym(1, 1, 1), GenSym(1, 3, 3)).raw_zero());
    CHECK(eb.commutator_coeff(GenSym(1, 1, 2), GenSym(1, 2, 3)) == T(1, 1, 3));
    // both kappa branches, q = 1 binomial window, kappa = 1/2
    P want = T(1, 1, 3) * T(1, 1, 1) + T(1, 1, 2) * T(1, 1, 2) + T(1, 1, 1) * T(1, 1, 3) // p-sum
             + T(1, 1, 3).scaled_q(rat(1, 2));
    CHECK(eb.commutator_coeff(GenSym(2, 1, 3), GenSym(1, 1, 1)) == want);
}

TEST_CASE("reduction rules: spot values in the smallest odd algebra") {
    auto B1 = AlgebraContext::make(Kind::B, 1);
    Engine<RatC> eng(B1);
    using P = NCPoly<RatC>;
    auto T = [](int r, int i, int j) { return P::gen(GenSym(r, i, j)); };

    // the (1,3) slot has no independent degree-one letter at all
    CHECK(eng.normal_order(T(1, 1, 3)).raw_zero());
    CHECK(eng.normal_order(T(1, 2, 3) + T(1, 1, 2)).raw_zero());
    CHECK(eng.normal_order(T(1, 3, 2) + T(1, 2, 1)).raw_zero());
    // middle diagonal folds into the two kept diagonals
    CHECK(eng.normal_order(T(1, 2, 2)) == (T(1, 1, 1) + T(1, 3, 3)).scaled_q(rat(1, 2)));

    // kept letters are fixed points of the rewrite
    for (GenSym g : {GenSym(2, 1, 2), GenSym(2, 2, 1), GenSym(3, 1, 1), GenSym(3, 3, 3)})
        CHECK(eng.normal_order(P::gen(g)) == P::gen(g));

    // symplectic antidiagonal letters survive instead
    auto C2 = AlgebraContext::make(Kind::C, 2);
    Engine<RatC> ec(C2);
    CHECK(ec.normal_order(T(1, 1, 4)) == T(1, 1, 4));
    CHECK(ec.normal_order(T(1, 2, 3)) == T(1, 2, 3));
    CHECK(!ec.normal_order(T(1, 3, 4)).raw_zero());
}

// u^{-s} coefficient of t_xy(u + d): binomial re-expansion of (u+d)^{-r}
template <class P>
static P shifted_tcoeff(int x, int y, int a, const Rational& d) {
    P acc;
    for (int r = 1; r <= a; ++r) {
        Rational c = Rational(rat_binom(a - 1, a - r) * rat_pow(Rational(-d), a - r));
        acc = acc + P::gen(GenSym(r, x, y)).scaled_q(c);
    }
    return acc;
}

TEST_CASE("both twisted products collapse entrywise to one scalar series") {
    // sum_i th_ki t_{i'k'}(u+kappa) t_il(u) and the opposite-order product
    // must agree, vanish off the diagonal, not depend on k on the diagonal,
    // and commute with every generator. This exercises the reduction rules
    // jointly with the commutation rule.
    for (auto ctx : {AlgebraContext::make(Kind::B, 1), AlgebraContext::make(Kind::C, 2),
                     AlgebraContext::make(Kind::D, 2)}) {
        Engine<RatC> eng(ctx);
        using P = NCPoly<RatC>;
        const int N = ctx.N;
        const Rational kap = ctx.kappa();

        auto left = [&](int k, int l, int s) { // (T'(u+kappa) T(u))_{kl} at u^{-s}
            P acc;
            for (int i = 1; i <= N; ++i) {
                Rational th(ctx.theta(k, i));
                for (int a = 0; a <= s; ++a) {
                    int b = s - a;
                    P first = a == 0 ? (i == k ? P::unit() : P::zero())
                                     : shifted_tcoeff<P>(ctx.prime(i), ctx.prime(k), a, kap);
                    P second = b == 0 ? (i == l ? P::unit() : P::zero()) : P::gen(GenSym(b, i, l));
                    acc = acc + (first * second).scaled_q(th);
                }
            }
            return acc;
        };
        auto right = [&](int k, int l, int s) { // (T(u) T'(u+kappa))_{kl} at u^{-s}
            P acc;
            for (int i = 1; i <= N; ++i) {
                Rational th(ctx.theta(i, l));
                for (int a = 0; a <= s; ++a) {
                    int b = s - a;
                    P first = a == 0 ? (i == k ? P::unit() : P::zero()) : P::gen(GenSym(a, k, i));
                    P second = b == 0 ? (i == l ? P::unit() : P::zero())
                                      : shifted_tcoeff<P>(ctx.prime(l), ctx.prime(i), b, kap);
                    acc = acc + (first * second).scaled_q(th);
                }
            }
            return acc;
        };

        for (int s = 1; s <= 3; ++s) {
            P zl = eng.normal_order(left(1, 1, s));
            CHECK(!zl.raw_zero());
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    P a = eng.normal_order(left(k, l, s));
                    P b = eng.normal_order(right(k, l, s));
                    CHECK(a == b);
                    if (k != l) CHECK(a.raw_zero());
                    else CHECK(a == zl);
                }
            // central at every letter of low weight
            for (int r = 1; r <= 2; ++r)
                for (int i = 1; i <= N; ++i)
                    for (int j = 1; j <= N; ++j) {
                        P x = P::gen(GenSym(r, i, j));
                        CHECK(eng.is_zero(zl * x - x * zl));
                    }
        }
    }
}

TEST_CASE("normal order: sorts, merges, fixes sorted words, idempotent") {
    auto B2 = AlgebraContext::make(Kind::B, 2);
    Engine<RatC> eng(B2);
    using P = NCPoly<RatC>;
    std::mt19937_64 rng(2026);

    for (int t = 0; t < 60; ++t) {
        GenSym x = random_gen(rng, B2.N, 3), y = random_gen(rng, B2.N, 3), z = random_gen(rng, B2.N, 2);
        P p = P::gen(x) * P::gen(y) * P::gen(z) - P::gen(z) * P::gen(x);
        P nf = eng.normal_order(p);
        for (const auto& [w, c] : nf.terms) CHECK(w.sorted());
        CHECK(eng.normal_order(nf) == nf);
    }
}

TEST_CASE("bracket antisymmetry in the quotient") {
    for (auto ctx : {AlgebraContext::make(Kind::B, 1), AlgebraContext::make(Kind::C, 2),
                     AlgebraContext::make(Kind::D, 2), AlgebraContext::make(Kind::A, 2)}) {
        Engine<RatC> eng(ctx);
        std::mt19937_64 rng(99);
        for (int t = 0; t < 40; ++t) {
            GenSym x = random_gen(rng, ctx.N, 3), y = random_gen(rng, ctx.N, 3);
            auto s = eng.comm(x, y) + eng.comm(y, x);
            CHECK(eng.is_zero(s));
        }
    }
}

TEST_CASE("jacobi identity on random triples") {
    for (auto ctx : {AlgebraContext::make(Kind::B, 1), AlgebraContext::make(Kind::C, 2),
                     AlgebraContext::make(Kind::D, 2)}) {
        Engine<RatC> eng(ctx);
        using P = NCPoly<RatC>;
        auto br = [&](const P& a, const P& b) { return eng.normal_order(a * b - b * a); };
        std::mt19937_64 rng(314);
        for (int t = 0; t < 100; ++t) {
            P x = P::gen(random_gen(rng, ctx.N, 3));
            P y = P::gen(random_gen(rng, ctx.N, 3));
            P z = P::gen(random_gen(rng, ctx.N, 2));
            P j = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y));
            CHECK(j.raw_zero());
        }
    }
}

TEST_CASE("normal order is confluent across association orders") {
    auto C2 = AlgebraContext::make(Kind::C, 2);
    Engine<RatC> eng(C2);
    using P = NCPoly<RatC>;
    std::mt19937_64 rng(55);
    for (int t = 0; t < 50; ++t) {
        P x = P::gen(random_gen(rng, C2.N, 3));
        P y = P::gen(random_gen(rng, C2.N, 3));
        P z = P::gen(random_gen(rng, C2.N, 2));
        P whole = eng.normal_order(x * y * z);
        CHECK(eng.normal_order(x * eng.normal_order(y * z)) == whole);
        CHECK(eng.normal_order(eng.normal_order(x * y) * z) == whole);
    }
}

TEST_CASE("commutator output respects the filtration bounds") {
    // len >= 2 words drop at least one filtration degree; single letters at
    // most keep it. The engine asserts this on every cached bracket; here we
    // observe it directly on a sweep.
    auto D2 = AlgebraContext::make(Kind::D, 2);
    Engine<RatC> eng(D2);
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 4; ++j) {
                    auto c = eng.commutator_coeff(GenSym(r, i, j), GenSym(s, j, i));
                    for (const auto& [w, cf] : c.terms) {
                        if (w.size() >= 2)
                            CHECK(w.degree() <= r + s - 3);
                        else
                            CHECK(w.degree() <= r + s - 2);
                    }
                }
}

TEST_CASE("central symbols commute and cross-copy letters commute") {
    auto B1 = AlgebraContext::make(Kind::B, 1);
    Engine<RatC> eng(B1);
    using P = NCPoly<RatC>;
    P f = P::gen(GenSym::central(2));
    P x = P::gen(GenSym(1, 1, 2));
    CHECK(eng.normal_order(f * x - x * f).raw_zero());

    P x0 = P::gen(GenSym(1, 1, 2, 0)), y1 = P::gen(GenSym(1, 2, 1, 1));
    CHECK(eng.normal_order(x0 * y1 - y1 * x0).raw_zero());
    // same-copy letters in copy 1 still carry the full relation
    auto c1 = eng.commutator_coeff(GenSym(1, 1, 2, 1), GenSym(1, 2, 3, 1));
    auto c0 = eng.commutator_coeff(GenSym(1, 1, 2, 0), GenSym(1, 2, 3, 0));
    CHECK(c1.terms.size() == c0.terms.size());
    for (const auto& [w, c] : c0.terms) {
        Word w1;
        for (int t = 0; t < w.size(); ++t) {
            GenSym g = w.at(t);
            w1.push(GenSym(g.r(), g.i(), g.j(), 1));
        }
        auto it = c1.terms.find(w1);
        REQUIRE(it != c1.terms.end());
        CHECK(it->second == c);
    }
}

TEST_CASE("quadext engine agrees with closed form") {
    auto B1 = AlgebraContext::make(Kind::B, 1);
    Engine<QuadExt> eng(B1);
    for (int r = 1; r <= 2; ++r)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    for (int l = 1; l <= 3; ++l)
                        CHECK(eng.commutator_coeff(GenSym(r, i, j), GenSym(2, k, l)) ==
                              closed_form_comm<QuadExt>(B1, r, i, j, 2, k, l));
}
