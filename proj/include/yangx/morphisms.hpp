#pragma once

// Algebra maps defined on letters, and the window machinery built from them:
// the psi embeddings with boxed quasideterminant images, the central
// rescaling mu_f, the inversion automorphism sigma, and the rank-one maps
// onto gl_2 targets. A map stores the image series of each generator; a
// letter pulls one coefficient, a word maps to the ordered product.

#include <functional>
#include <memory>

#include "yangx/gauss.hpp"

namespace yangx {

// ---------------------------------------------------------------- frames

// depth-m window: the sub context of the same kind with rank n-m, ambient
// rows and columns m+1 .. (m+1)', and the shifted constant kappa - m
struct SubmatrixFrame {
    int m = 0;
    AlgebraContext sub;
    int lo = 0, hi = 0;

    static SubmatrixFrame make(const AlgebraContext& ctx, int m) {
        assert(ctx.has_prime());
        const int limit = (ctx.kind == Kind::B) ? ctx.n : ctx.n - 1;
        assert(m >= 0 && m <= limit && ctx.n - m >= 1);
        SubmatrixFrame fr;
        fr.m = m;
        fr.sub = AlgebraContext::make(ctx.kind, ctx.n - m);
        fr.lo = m + 1;
        fr.hi = ctx.N - m;
        // the window inherits kappa - m as its own constant
        assert(fr.sub.kappa() == ctx.kappa() - m);
        return fr;
    }
};

// ----------------------------------------------------------- letter maps

inline Rational src_coeff(const RatC& c) { return c.v; }
inline Rational src_coeff(const QuadExt& c) {
    assert(c.is_rational());
    return c.a;
}

// map into the algebra of the target engine, given by generator images:
// letter t_ij^(r) pulls coefficient r of image(i, j), central letters pass
// through unchanged. Images are produced on first use and kept.
template <class C>
struct Morphism {
    AlgebraContext source;
    NCRing<C> ring{nullptr};
    std::function<USeries<NCRing<C>>(int, int)> gen_image;
    std::map<std::pair<int, int>, USeries<NCRing<C>>> cache;

    const USeries<NCRing<C>>& image(int i, int j) {
        assert(i >= 1 && i <= source.N && j >= 1 && j <= source.N);
        auto key = std::make_pair(i, j);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        assert(gen_image && "no image rule for this generator");
        return cache.emplace(key, gen_image(i, j)).first->second;
    }

    NCPoly<C> letter_image(GenSym g) {
        if (g.is_central()) return NCPoly<C>::gen(g);
        assert(g.tag() == 0);
        const auto& s = image(g.i(), g.j());
        assert(g.r() >= 1 && g.r() <= s.K());
        return s.c[g.r()];
    }
};

// extend multiplicatively over each word, then linearly
template <class C, class SC>
NCPoly<C> morph_apply(Morphism<C>& phi, const NCPoly<SC>& x) {
    const NCRing<C>& R = phi.ring;
    auto acc = R.zero();
    for (const auto& [w, c] : x.terms) {
        auto cur = R.one();
        for (int k = 0; k < (int)w.n; ++k) cur = R.mul(cur, phi.letter_image(w.at(k)));
        acc = R.add(acc, R.scal(cur, src_coeff(c)));
    }
    return R.normalize(acc);
}

template <class C, class SR>
USeries<NCRing<C>> morph_apply_series(Morphism<C>& phi, const USeries<SR>& s) {
    auto out = us_zero(phi.ring, s.K());
    for (int r = 0; r <= s.K(); ++r) out.c[r] = morph_apply(phi, s.c[r]);
    return out;
}

// ---------------------------------------------------- homomorphism checks

// image compatibility with the multiplication table on representative
// letters: phi of the normal form of x y must match the normal form of
// phi(x) phi(y). The rewrite rules are pairwise-local, so products of
// representative pairs decide all of them.
template <class SC, class C>
CheckResult morphism_respects_products(Engine<SC>& src, Morphism<C>& phi, int K) {
    CheckResult res;
    const int N = src.ctx.N;
    for (int r1 = 1; r1 < K; ++r1)
        for (int r2 = 1; r1 + r2 <= K; ++r2)
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    GenSym x(r1, i, j);
                    if (!src.is_rep_letter(x)) continue;
                    for (int k = 1; k <= N; ++k)
                        for (int l = 1; l <= N; ++l) {
                            GenSym y(r2, k, l);
                            if (!src.is_rep_letter(y)) continue;
                            auto prod =
                                src.normal_order(NCPoly<SC>::gen(x) * NCPoly<SC>::gen(y));
                            auto lhs = morph_apply(phi, prod);
                            auto rhs = phi.ring.normalize(
                                phi.ring.mul(phi.letter_image(x), phi.letter_image(y)));
                            if (phi.ring.raw_zero(phi.ring.sub(lhs, rhs))) continue;
                            res.fail("product image mismatch at " + x.str() + " * " + y.str());
                            return res;
                        }
                }
    return res;
}

// non-representative letters rewrite linearly; the stored image must agree
// with the image of the rewrite
template <class SC, class C>
CheckResult morphism_respects_rules(Engine<SC>& src, Morphism<C>& phi, int K) {
    CheckResult res;
    const int N = src.ctx.N;
    for (int r = 1; r <= K; ++r)
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                GenSym g(r, i, j);
                if (src.is_rep_letter(g)) continue;
                auto lhs = phi.ring.normalize(phi.letter_image(g));
                auto rhs = morph_apply(phi, src.rule_rhs(g));
                if (phi.ring.raw_zero(phi.ring.sub(lhs, rhs))) continue;
                res.fail("folded image mismatch at " + g.str());
                return res;
            }
    return res;
}

// ----------------------------------------------------------- psi embeddings

// psi_m: the rank n-m algebra of the same kind into the ambient one;
// letter (i, j) of the small algebra lands on the boxed window entry
// (m+i, m+j)
template <class C>
Morphism<C> psi_m(GaussBuilder<C>& gb, int m) {
    SubmatrixFrame fr = SubmatrixFrame::make(gb.eng.ctx, m);
    Morphism<C> phi;
    phi.source = fr.sub;
    phi.ring = gb.ring;
    GaussBuilder<C>* pb = &gb;
    phi.gen_image = [pb, m](int i, int j) { return pb->boxed(m, i + m, j + m); };
    return phi;
}

// T^[m] over the window with labels shifted down to 1 .. N-2m
template <class C>
USeries<NCMatRing<C>> boxed_matrix_series(GaussBuilder<C>& gb, int m) {
    const int M = gb.eng.ctx.N - 2 * m;
    assert(M >= 1);
    NCMatRing<C> mr{gb.ring, M};
    auto T = us_zero(mr, gb.K);
    for (int a = 1; a <= M; ++a)
        for (int b = 1; b <= M; ++b) {
            auto s = gb.boxed(m, a + m, b + m);
            for (int r = 0; r <= gb.K; ++r) T.c[r].at(a, b) = s.c[r];
        }
    return T;
}

// entry (i, j) of the product F H E with the triangular sums starting at
// row/column k_lo; works for full data (k_lo = 1) and windows (k_lo = m+1)
template <class R, class GD>
USeries<R> gauss_entry(const R& er, const GD& gd, int K, int k_lo, int i, int j) {
    auto acc = us_zero(er, K);
    for (int k = k_lo; k <= std::min(i, j); ++k) {
        auto term = gd.h[k];
        if (i > k) term = us_mul(er, gd.f_at(i, k), term);
        if (j > k) term = us_mul(er, term, gd.e_at(k, j));
        acc = us_add(er, acc, term);
    }
    return us_nf(er, acc);
}

// the ambient Gauss data restricted to the window reassembles every boxed
// entry: T^[m] = F^[m] H^[m] E^[m]. Pure elimination bookkeeping, so any
// window with at least one row qualifies, not only the frames psi_m uses.
template <class C>
CheckResult gauss_of_submatrix_check(GaussBuilder<C>& gb, const GaussData<C>& gd, int m) {
    const int N = gb.eng.ctx.N;
    assert(m >= 0 && N - 2 * m >= 1);
    const int lo = m + 1, hi = N - m;
    CheckResult res;
    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j) {
            int bad = -1;
            if (us_nf_equal(gb.ring, gauss_entry(gb.ring, gd, gb.K, m + 1, i, j),
                            gb.boxed(m, i, j), &bad))
                continue;
            res.fail("window gauss product differs from boxed at (" + std::to_string(i) + "," +
                     std::to_string(j) + ") order " + std::to_string(bad));
            return res;
        }
    return res;
}

// psi_l after psi_m equals psi_{l+m}; mid is a builder for the rank n-l
// algebra of the same kind as big
template <class C>
CheckResult psi_consistency(GaussBuilder<C>& big, GaussBuilder<C>& mid, int l, int m) {
    const auto& bctx = big.eng.ctx;
    const auto& mctx = mid.eng.ctx;
    assert(mctx.kind == bctx.kind && mctx.n == bctx.n - l);
    SubmatrixFrame fr = SubmatrixFrame::make(mctx, m);
    (void)fr;
    Morphism<C> phil = psi_m(big, l);
    CheckResult res;
    const int M = mctx.N - 2 * m;
    for (int a = 1; a <= M; ++a)
        for (int b = 1; b <= M; ++b) {
            auto lhs = morph_apply_series(phil, mid.boxed(m, a + m, b + m));
            auto rhs = big.boxed(l + m, a + l + m, b + l + m);
            int bad = -1;
            if (us_nf_equal(big.ring, lhs, rhs, &bad)) continue;
            res.fail("psi composite differs at (" + std::to_string(a) + "," + std::to_string(b) +
                     ") order " + std::to_string(bad));
            return res;
        }
    return res;
}

// ------------------------------------------------------ generic gauss ops

// Gauss data of an arbitrary matrix series over any entry ring
template <class R>
struct SeriesGauss {
    std::vector<USeries<R>> h;                 // 1-based, h[0] unused
    std::map<std::pair<int, int>, USeries<R>> e, f;

    const USeries<R>& e_at(int i, int j) const {
        auto it = e.find({i, j});
        assert(it != e.end());
        return it->second;
    }
    const USeries<R>& f_at(int j, int i) const {
        auto it = f.find({j, i});
        assert(it != f.end());
        return it->second;
    }
};

// LDU by sequential Schur complements; needs a unit constant term. After
// k-1 elimination steps the working entry (i, j) is the boxed
// quasideterminant of depth k-1, so h, e, f come out in the same
// normalization as the letter-level decomposition.
template <class R>
SeriesGauss<R> series_gauss(const R& er, const USeries<MatRingOver<R>>& T) {
    const int M = T.c[0].rows;
    const int K = T.K();
    std::vector<std::vector<USeries<R>>> S(M + 1, std::vector<USeries<R>>(M + 1, us_zero(er, K)));
    for (int i = 1; i <= M; ++i)
        for (int j = 1; j <= M; ++j)
            for (int r = 0; r <= K; ++r) S[i][j].c[r] = T.c[r].at(i, j);
    SeriesGauss<R> sg;
    sg.h.assign(M + 1, us_zero(er, K));
    for (int k = 1; k <= M; ++k) {
        sg.h[k] = us_nf(er, S[k][k]);
        if (k == M) break;
        auto hinv = us_nf(er, us_inv(er, sg.h[k]));
        for (int j = k + 1; j <= M; ++j) {
            sg.e.emplace(std::make_pair(k, j), us_nf(er, us_mul(er, hinv, S[k][j])));
            sg.f.emplace(std::make_pair(j, k), us_nf(er, us_mul(er, S[j][k], hinv)));
        }
        for (int a = k + 1; a <= M; ++a)
            for (int b = k + 1; b <= M; ++b)
                S[a][b] = us_nf(
                    er, us_sub(er, S[a][b], us_mul(er, us_mul(er, S[a][k], hinv), S[k][b])));
    }
    return sg;
}

// rebuild the matrix series from Gauss data
template <class R>
USeries<MatRingOver<R>> gauss_assemble(const R& er, const SeriesGauss<R>& sg) {
    const int M = (int)sg.h.size() - 1;
    assert(M >= 1);
    const int K = sg.h[1].K();
    MatRingOver<R> mr{er, M};
    auto T = us_zero(mr, K);
    for (int i = 1; i <= M; ++i)
        for (int j = 1; j <= M; ++j) {
            auto s = gauss_entry(er, sg, K, 1, i, j);
            for (int r = 0; r <= K; ++r) T.c[r].at(i, j) = s.c[r];
        }
    return T;
}

// boxed quasideterminant of an arbitrary matrix series with unit constant
// term: entry (i, j) minus row i of the leading m columns, times the
// inverse of the leading m x m block, times column j
template <class R>
USeries<R> series_boxed(const R& er, const USeries<MatRingOver<R>>& T, int m, int i, int j) {
    const int M = T.c[0].rows;
    const int K = T.K();
    assert(m >= 0 && i > m && j > m && i <= M && j <= M);
    auto entry = [&](int a, int b) {
        auto s = us_zero(er, K);
        for (int r = 0; r <= K; ++r) s.c[r] = T.c[r].at(a, b);
        return s;
    };
    auto acc = entry(i, j);
    if (m == 0) return us_nf(er, acc);
    MatRingOver<R> br{er, m};
    auto B = us_zero(br, K);
    for (int r = 0; r <= K; ++r)
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b) B.c[r].at(a, b) = T.c[r].at(a, b);
    auto binv = us_nf(br, us_inv(br, B));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            auto mid = us_zero(er, K);
            for (int r = 0; r <= K; ++r) mid.c[r] = binv.c[r].at(a, b);
            if (us_raw_zero(er, mid)) continue;
            acc = us_sub(er, acc, us_mul(er, us_mul(er, entry(i, a), mid), entry(b, j)));
        }
    return us_nf(er, acc);
}

// --------------------------------------------------------------- mu_f, sigma

// f(u) = 1 + c_1 u^-1 + ... + c_K u^-K with fresh central letters
template <class C>
USeries<NCRing<C>> free_central_series(const NCRing<C>& R, int K, int base = 1) {
    assert(base >= 1);
    auto f = us_one(R, K);
    for (int r = 1; r <= K; ++r) f.c[r] = NCPoly<C>::gen(GenSym::central(base + r - 1));
    return f;
}

// scalar series times matrix series, entrywise from the left
template <class C>
USeries<NCMatRing<C>> scalar_times_matrix(const NCMatRing<C>& mr, const USeries<NCRing<C>>& f,
                                          const USeries<NCMatRing<C>>& T) {
    auto F = us_zero(mr, T.K());
    for (int r = 0; r <= std::min(f.K(), T.K()); ++r)
        for (int d = 1; d <= mr.m; ++d) F.c[r].at(d, d) = f.c[r];
    return us_mul(mr, F, T);
}

// mu_f: t_ij(u) -> f(u) t_ij(u), with f central
template <class C>
Morphism<C> mu_f(GaussBuilder<C>& gb, const USeries<NCRing<C>>& f) {
    Morphism<C> phi;
    phi.source = gb.eng.ctx;
    phi.ring = gb.ring;
    GaussBuilder<C>* pb = &gb;
    auto fc = std::make_shared<USeries<NCRing<C>>>(f);
    phi.gen_image = [pb, fc](int i, int j) {
        return us_nf(pb->ring, us_mul(pb->ring, *fc, pb->tser(i, j)));
    };
    return phi;
}

// sigma: T(u) -> T(-u)^{-1}; the whole image matrix is computed at once
template <class C>
Morphism<C> sigma_morphism(GaussBuilder<C>& gb) {
    const int N = gb.eng.ctx.N;
    NCMatRing<C> mr{gb.ring, N};
    auto S = us_nf(
        mr, us_inv(mr, us_subst_linear(mr, t_matrix_series(gb, mr), Rational(-1), Rational(0))));
    Morphism<C> phi;
    phi.source = gb.eng.ctx;
    phi.ring = gb.ring;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            auto s = us_zero(gb.ring, gb.K);
            for (int r = 0; r <= gb.K; ++r) s.c[r] = S.c[r].at(i, j);
            phi.cache.emplace(std::make_pair(i, j), std::move(s));
        }
    return phi;
}

// ------------------------------------------------------------ rank-one maps

// scale a series by a ground field element (not just a rational)
template <class C>
USeries<NCRing<C>> us_scal_c(const USeries<NCRing<C>>& s, const C& k) {
    auto out = s;
    for (auto& x : out.c) x = x.scaled(k);
    return out;
}

// Gauss series of a gl_2 letter matrix carrying the given copy tag
template <class C>
SeriesGauss<NCRing<C>> gl2_gauss(const NCRing<C>& R, int K, int tag) {
    assert(R.eng->ctx.kind == Kind::A && R.eng->ctx.N == 2);
    NCMatRing<C> mr{R, 2};
    auto T = us_zero(mr, K);
    T.c[0] = mr.one();
    for (int r = 1; r <= K; ++r)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) T.c[r].at(i, j) = NCPoly<C>::gen(GenSym(r, i, j, tag));
    return series_gauss(R, T);
}

template <class C>
Morphism<C> morphism_from_gauss(const AlgebraContext& source, const NCRing<C>& R,
                                const SeriesGauss<NCRing<C>>& im) {
    auto T = gauss_assemble(R, im);
    Morphism<C> phi;
    phi.source = source;
    phi.ring = R;
    for (int i = 1; i <= source.N; ++i)
        for (int j = 1; j <= source.N; ++j) {
            auto s = us_zero(R, T.K());
            for (int r = 0; r <= T.K(); ++r) s.c[r] = T.c[r].at(i, j);
            phi.cache.emplace(std::make_pair(i, j), us_nf(R, s));
        }
    return phi;
}

// X(sp_2) -> Y(gl_2): every Gaussian generator goes to its namesake at the
// halved argument
template <class C>
Morphism<C> lowrank_C1(Engine<C>& gl2, int K) {
    NCRing<C> R{&gl2};
    auto sg = gl2_gauss(R, K, 0);
    auto half = [&](const USeries<NCRing<C>>& s) { return us_scale_var(R, s, Rational(1, 2)); };
    SeriesGauss<NCRing<C>> im;
    im.h.assign(3, us_zero(R, K));
    im.h[1] = half(sg.h[1]);
    im.h[2] = half(sg.h[2]);
    im.e.emplace(std::make_pair(1, 2), half(sg.e_at(1, 2)));
    im.f.emplace(std::make_pair(2, 1), half(sg.f_at(2, 1)));
    return morphism_from_gauss(AlgebraContext::make(Kind::C, 1), R, im);
}

// X(o_3) -> Y(gl_2): doubled arguments with unit offsets; e and f pick up
// sqrt2 factors, which pair up in every identity of the source
template <class C>
Morphism<C> lowrank_B1(Engine<C>& gl2, int K) {
    NCRing<C> R{&gl2};
    auto sg = gl2_gauss(R, K, 0);
    auto at = [&](const USeries<NCRing<C>>& s, int d) {
        return us_subst_linear(R, s, Rational(2), Rational(d));
    };
    const C s2 = C::sqrt2();
    auto H1_0 = at(sg.h[1], 0), H1_1 = at(sg.h[1], 1);
    auto H2_0 = at(sg.h[2], 0), H2_1 = at(sg.h[2], 1);
    auto E_0 = at(sg.e_at(1, 2), 0), E_1 = at(sg.e_at(1, 2), 1);
    auto F_0 = at(sg.f_at(2, 1), 0), F_1 = at(sg.f_at(2, 1), 1);
    SeriesGauss<NCRing<C>> im;
    im.h.assign(4, us_zero(R, K));
    im.h[1] = us_mul(R, H1_0, H1_1);
    im.h[2] = us_mul(R, H1_0, H2_1);
    im.h[3] = us_mul(R, H2_0, H2_1);
    im.e.emplace(std::make_pair(1, 2), us_scal_c(E_1, s2));
    im.e.emplace(std::make_pair(2, 3), us_scal_c(E_0, -s2));
    im.e.emplace(std::make_pair(1, 3), us_neg(R, us_mul(R, E_1, E_1)));
    im.f.emplace(std::make_pair(2, 1), us_scal_c(F_1, s2));
    im.f.emplace(std::make_pair(3, 2), us_scal_c(F_0, -s2));
    im.f.emplace(std::make_pair(3, 1), us_neg(R, us_mul(R, F_1, F_1)));
    return morphism_from_gauss(AlgebraContext::make(Kind::B, 1), R, im);
}

// X(o_4) -> Y(gl_2) tensor Y(gl_2): one gl_2 engine, the second copy keyed
// by letter tag 1 and commuting with the first exactly
template <class C>
Morphism<C> lowrank_D2(Engine<C>& gl2, int K) {
    NCRing<C> R{&gl2};
    auto sg = gl2_gauss(R, K, 0);
    auto sh = gl2_gauss(R, K, 1);
    const auto &H1 = sg.h[1], &H2 = sg.h[2], &E = sg.e_at(1, 2), &F = sg.f_at(2, 1);
    const auto &P1 = sh.h[1], &P2 = sh.h[2], &Ep = sh.e_at(1, 2), &Fp = sh.f_at(2, 1);
    SeriesGauss<NCRing<C>> im;
    im.h.assign(5, us_zero(R, K));
    im.h[1] = us_mul(R, H1, P1);
    im.h[2] = us_mul(R, H1, P2);
    im.h[3] = us_mul(R, H2, P1);
    im.h[4] = us_mul(R, H2, P2);
    im.e.emplace(std::make_pair(1, 2), Ep);
    im.e.emplace(std::make_pair(1, 3), E);
    im.e.emplace(std::make_pair(1, 4), us_neg(R, us_mul(R, E, Ep)));
    im.e.emplace(std::make_pair(2, 3), us_zero(R, K));
    im.e.emplace(std::make_pair(2, 4), us_neg(R, E));
    im.e.emplace(std::make_pair(3, 4), us_neg(R, Ep));
    im.f.emplace(std::make_pair(2, 1), Fp);
    im.f.emplace(std::make_pair(3, 1), F);
    im.f.emplace(std::make_pair(4, 1), us_neg(R, us_mul(R, F, Fp)));
    im.f.emplace(std::make_pair(3, 2), us_zero(R, K));
    im.f.emplace(std::make_pair(4, 2), us_neg(R, F));
    im.f.emplace(std::make_pair(4, 3), us_neg(R, Fp));
    return morphism_from_gauss(AlgebraContext::make(Kind::D, 2), R, im);
}

}  // namespace yangx
