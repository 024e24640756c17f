#include "yangx/evals.hpp"

#include "yangx/rmatrix.hpp"
#include "yangx/tensor.hpp"

namespace yangx {

static RFMat rf_slice(const SparseMat<RationalFunction>& R, int N, int i, int j) {
    RFMat m(N, N);
    for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
            auto it = R.e.find({flat_index({i, k}, N), flat_index({j, l}, N)});
            if (it != R.e.end()) m.at(k, l) = it->second;
        }
    return m;
}

EvalAssignment build_eval(const AlgebraContext& ctx, const Rational& a, int Kmax, bool check_rtt) {
    EvalAssignment ev;
    ev.ctx = ctx;
    ev.a = a;
    ev.Kmax = Kmax;
    if (check_rtt) {
        CheckResult rtt = verify_ybe(ctx, a);
        assert(rtt.pass && "shifted Yang-Baxter instance backing the assignment");
        (void)rtt;
    }

    const int N = ctx.N;
    SparseMat<RationalFunction> R = r_sym(ctx, Rational(-a));
    ev.slice.reserve((size_t)N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) ev.slice.push_back(rf_slice(R, N, i, j));

    ev.img.assign(Kmax, std::vector<QMat>((size_t)N * N, QMat(N, N)));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const RFMat& s = ev.t_series(i, j);
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    std::vector<Rational> cs = expand_at_infinity(s.at(k, l), Kmax);
                    assert(cs[0] == Rational(i == j && k == l ? 1 : 0));
                    for (int r = 1; r <= Kmax; ++r) ev.img[r - 1][(size_t)(i - 1) * N + (j - 1)].at(k, l) = cs[r];
                }
        }
    return ev;
}

QMat eval_word(const EvalAssignment& ev, const Word& w) {
    QMat acc = QMat::identity(ev.ctx.N);
    for (int t = 0; t < w.size(); ++t) {
        GenSym g = w.at(t);
        if (g.is_central()) {
            auto it = ev.central_values.find(g.packed);
            assert(it != ev.central_values.end() && "central letter without a value");
            acc = acc * it->second;
            continue;
        }
        assert(g.tag() == 0 && "copy-tagged letters have no single-space image");
        acc = acc * ev.t_img(g.i(), g.j(), g.r());
    }
    return acc;
}

RFMat rfm_shifted(const RFMat& m, const Rational& c) {
    RFMat r = m;
    for (auto& x : r.a) x = x.shifted(c);
    return r;
}

static RationalFunction rf_inv(const RationalFunction& f) {
    assert(!f.is_zero());
    return RationalFunction(f.den, f.num);
}

RFMat rfm_inverse(const RFMat& m) {
    assert(m.rows == m.cols);
    const int d = m.rows;
    RFMat A = m, I = RFMat::identity(d);
    for (int k = 1; k <= d; ++k) {
        int p = k;
        while (p <= d && A.at(p, k).is_zero()) ++p;
        assert(p <= d && "matrix over the function field is singular");
        if (p != k)
            for (int c = 1; c <= d; ++c) {
                std::swap(A.at(k, c), A.at(p, c));
                std::swap(I.at(k, c), I.at(p, c));
            }
        RationalFunction piv = rf_inv(A.at(k, k));
        for (int c = 1; c <= d; ++c) {
            A.at(k, c) = A.at(k, c) * piv;
            I.at(k, c) = I.at(k, c) * piv;
        }
        for (int r = 1; r <= d; ++r) {
            if (r == k || A.at(r, k).is_zero()) continue;
            RationalFunction f = A.at(r, k);
            for (int c = 1; c <= d; ++c) {
                A.at(r, c) = A.at(r, c) - f * A.at(k, c);
                I.at(r, c) = I.at(r, c) - f * I.at(k, c);
            }
        }
    }
    return I;
}

EvalGauss eval_gauss(const EvalAssignment& ev, bool check) {
    const int N = ev.ctx.N;
    EvalGauss g;
    g.N = N;
    g.h.assign((size_t)N + 1, RFMat());
    std::vector<RFMat> S(ev.slice);
    auto blk = [&](int i, int j) -> RFMat& { return S[(size_t)(i - 1) * N + (j - 1)]; };
    for (int i = 1; i <= N; ++i) {
        g.h[i] = blk(i, i);
        if (i == N) break;
        RFMat hinv = rfm_inverse(g.h[i]);
        for (int j = i + 1; j <= N; ++j) {
            g.e.emplace(std::make_pair(i, j), hinv * blk(i, j));
            g.f.emplace(std::make_pair(j, i), blk(j, i) * hinv);
        }
        for (int a = i + 1; a <= N; ++a) {
            RFMat rowfac = blk(a, i) * hinv;
            for (int b = i + 1; b <= N; ++b) blk(a, b) = blk(a, b) - rowfac * blk(i, b);
        }
    }
    if (check) {
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                RFMat acc(N, N);
                for (int k = 1; k <= (i < j ? i : j); ++k) {
                    RFMat term = g.h[k];
                    if (i > k) term = g.f_at(i, k) * term;
                    if (j > k) term = term * g.e_at(k, j);
                    acc = acc + term;
                }
                assert(acc == ev.t_series(i, j) && "F H E must reproduce the slices");
            }
    }
    return g;
}

RFMat eval_boxed(const EvalAssignment& ev, int m, int i, int j) {
    const int N = ev.ctx.N;
    assert(m >= 0 && i > m && j > m && i <= N && j <= N);
    if (m == 0) return ev.t_series(i, j);
    RFMat B(m * N, m * N);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            const RFMat& s = ev.t_series(a, b);
            for (int r = 1; r <= N; ++r)
                for (int c = 1; c <= N; ++c) B.at((a - 1) * N + r, (b - 1) * N + c) = s.at(r, c);
        }
    RFMat Binv = rfm_inverse(B);
    RFMat acc = ev.t_series(i, j);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            RFMat mid(N, N);
            for (int r = 1; r <= N; ++r)
                for (int c = 1; c <= N; ++c) mid.at(r, c) = Binv.at((a - 1) * N + r, (b - 1) * N + c);
            acc = acc - ev.t_series(i, a) * mid * ev.t_series(b, j);
        }
    return acc;
}

EvalCenter eval_center(const EvalAssignment& ev) {
    const auto& ctx = ev.ctx;
    assert(ctx.has_prime());
    const int N = ctx.N;
    const Rational kap = ctx.kappa();
    EvalCenter out;
    bool have = false;
    for (int k = 1; k <= N && out.scalar_ok; ++k)
        for (int l = 1; l <= N && out.scalar_ok; ++l) {
            RFMat p1(N, N), p2(N, N);
            for (int i = 1; i <= N; ++i) {
                p1 = p1 + rfm_shifted(ev.t_series(ctx.prime(i), ctx.prime(k)), kap) * ev.t_series(i, l) *
                              RationalFunction(Rational(ctx.theta(k, i)));
                p2 = p2 + ev.t_series(k, i) * rfm_shifted(ev.t_series(ctx.prime(l), ctx.prime(i)), kap) *
                              RationalFunction(Rational(ctx.theta(i, l)));
            }
            if (k != l) {
                if (!p1.is_zero() || !p2.is_zero()) {
                    out.scalar_ok = false;
                    out.witness = "twisted product has off-diagonal entry (" + std::to_string(k) + "," +
                                  std::to_string(l) + ")";
                }
                continue;
            }
            bool ok = (p1 == p2);
            for (int r = 1; r <= N && ok; ++r)
                for (int s = 1; s <= N; ++s) {
                    const RationalFunction want = (r == s) ? p1.at(1, 1) : RationalFunction();
                    if (p1.at(r, s) == want) continue;
                    ok = false;
                    break;
                }
            if (!ok) {
                out.scalar_ok = false;
                out.witness = "twisted product not scalar at diagonal slot " + std::to_string(k);
                continue;
            }
            if (!have) {
                out.z = p1.at(1, 1);
                have = true;
            } else if (!(out.z == p1.at(1, 1))) {
                out.scalar_ok = false;
                out.witness = "twisted product depends on the diagonal slot";
            }
        }
    return out;
}

RFMat eval_boxed_via_gauss(const EvalAssignment& ev, const EvalGauss& g, int m, int i, int j) {
    const int N = ev.ctx.N;
    assert(m >= 0 && i > m && j > m && i <= N && j <= N);
    RFMat acc = ev.t_series(i, j);
    for (int k = 1; k <= m; ++k) acc = acc - g.f_at(i, k) * g.h[k] * g.e_at(k, j);
    return acc;
}

static Poly poly_lcm(const Poly& a, const Poly& b) {
    Poly g = poly_gcd(a, b), q, r;
    poly_divmod(a * b, g, q, r);
    assert(r.is_zero());
    return q;
}

static AlgebraContext window_context(const AlgebraContext& ctx, int m) {
    assert(ctx.has_prime());
    const int limit = (ctx.kind == Kind::B) ? ctx.n : ctx.n - 1;
    assert(m >= 1 && m <= limit && ctx.n - m >= 1);
    (void)limit;
    return AlgebraContext::make(ctx.kind, ctx.n - m);
}

CheckResult eval_sub_rtt(const EvalAssignment& ev, int m) {
    CheckResult res;
    const AlgebraContext& ctx = ev.ctx;
    AlgebraContext sub = window_context(ctx, m);
    const int M = sub.N, N = ctx.N;

    std::vector<std::vector<RFMat>> s((size_t)M + 1, std::vector<RFMat>((size_t)M + 1));
    Poly D(Rational(1));
    long maxnum = 0;
    for (int a = 1; a <= M; ++a)
        for (int b = 1; b <= M; ++b) {
            s[a][b] = eval_boxed(ev, m, a + m, b + m);
            for (int r = 1; r <= N; ++r)
                for (int c = 1; c <= N; ++c) {
                    const RationalFunction& f = s[a][b].at(r, c);
                    if (f.is_zero()) continue;
                    maxnum = std::max(maxnum, (long)f.num.deg());
                    D = poly_lcm(D, f.den);
                }
        }
    // Clearing both R kernels and the denominators D(u) D(v) makes every
    // entry identity a polynomial of u-degree <= 2 + deg D + maxnum (and
    // the same in v), so a grid strictly beyond those bounds decides it.
    const long du = 2 + D.deg() + maxnum, dv = du;

    // u on integers, v offset by 1/3: u - v misses 0 and the half-integral
    // kappa of the window context, keeping every R(u-v) entry finite
    auto collect = [&](long count, const Rational& off) {
        std::vector<Rational> pts;
        for (long t = 1; (long)pts.size() < count; ++t) {
            Rational x = Rational(t) + off;
            if (sgn(D.eval(x)) != 0) pts.push_back(x);
        }
        return pts;
    };
    std::vector<Rational> ugrid = collect(du + 1, Rational(0));
    std::vector<Rational> vgrid = collect(dv + 1, Rational(1, 3));

    auto eval_family = [&](const Rational& x) {
        std::vector<std::vector<QMat>> out((size_t)M + 1,
                                           std::vector<QMat>((size_t)M + 1, QMat(N, N)));
        for (int a = 1; a <= M; ++a)
            for (int b = 1; b <= M; ++b)
                for (int r = 1; r <= N; ++r)
                    for (int c = 1; c <= N; ++c) out[a][b].at(r, c) = s[a][b].at(r, c).eval(x);
        return out;
    };
    std::vector<std::vector<std::vector<QMat>>> su, sv;
    su.reserve(ugrid.size());
    sv.reserve(vgrid.size());
    for (const auto& x : ugrid) su.push_back(eval_family(x));
    for (const auto& x : vgrid) sv.push_back(eval_family(x));

    for (size_t pu = 0; pu < ugrid.size(); ++pu)
        for (size_t pv = 0; pv < vgrid.size(); ++pv) {
            const Rational x0 = ugrid[pu] - vgrid[pv];
            assert(r_defined_at(sub, x0));
            SparseQ R0 = r_at(sub, x0);
            const auto &U = su[pu], &V = sv[pv];
            for (int b = 1; b <= M; ++b)
                for (int d = 1; d <= M; ++d) {
                    // lhs[(a,c)] = sum R0[(a,c),(a1,c1)] s_{a1 b}(u) s_{c1 d}(v)
                    std::vector<QMat> lhs((size_t)M * M, QMat(N, N)), rhs((size_t)M * M, QMat(N, N));
                    for (const auto& [rc, val] : R0.e) {
                        const int a1 = rc.second / M + 1, c1 = rc.second % M + 1;
                        lhs[(size_t)rc.first] = lhs[(size_t)rc.first] + (U[a1][b] * V[c1][d]) * val;
                        // the same entry acts on the right at aux column (b,d)
                        if (rc.second == (b - 1) * M + (d - 1)) {
                            const int a2 = rc.first / M + 1, c2 = rc.first % M + 1;
                            for (int a = 1; a <= M; ++a)
                                for (int c = 1; c <= M; ++c) {
                                    size_t pos = (size_t)(a - 1) * M + (c - 1);
                                    rhs[pos] = rhs[pos] + (V[c][c2] * U[a][a2]) * val;
                                }
                        }
                    }
                    for (int a = 1; a <= M; ++a)
                        for (int c = 1; c <= M; ++c) {
                            size_t pos = (size_t)(a - 1) * M + (c - 1);
                            if (lhs[pos] == rhs[pos]) continue;
                            res.fail("window RTT fails at u=" + rat_str(ugrid[pu]) + " v=" +
                                     rat_str(vgrid[pv]) + " aux (" + std::to_string(a) + "," +
                                     std::to_string(c) + ")->(" + std::to_string(b) + "," +
                                     std::to_string(d) + ")");
                            return res;
                        }
                }
        }
    return res;
}

EvalSubCenter eval_sub_center(const EvalAssignment& ev, int m) {
    const AlgebraContext& ctx = ev.ctx;
    AlgebraContext sub = window_context(ctx, m);
    const int M = sub.N, N = ctx.N;
    const Rational kap = sub.kappa();
    assert(kap == ctx.kappa() - m);

    std::vector<std::vector<RFMat>> s((size_t)M + 1, std::vector<RFMat>((size_t)M + 1));
    for (int a = 1; a <= M; ++a)
        for (int b = 1; b <= M; ++b) s[a][b] = eval_boxed(ev, m, a + m, b + m);

    EvalSubCenter out;
    out.z = RFMat(N, N);
    bool have = false;
    for (int k = 1; k <= M && out.window_scalar; ++k)
        for (int l = 1; l <= M && out.window_scalar; ++l) {
            RFMat p1(N, N), p2(N, N);
            for (int i = 1; i <= M; ++i) {
                p1 = p1 + rfm_shifted(s[sub.prime(i)][sub.prime(k)], kap) * s[i][l] *
                              RationalFunction(Rational(sub.theta(k, i)));
                p2 = p2 + s[k][i] * rfm_shifted(s[sub.prime(l)][sub.prime(i)], kap) *
                              RationalFunction(Rational(sub.theta(i, l)));
            }
            if (k != l) {
                if (!p1.is_zero() || !p2.is_zero()) {
                    out.window_scalar = false;
                    out.witness = "sub-twisted product has off-diagonal window entry (" +
                                  std::to_string(k) + "," + std::to_string(l) + ")";
                }
                continue;
            }
            if (!(p1 == p2)) {
                out.window_scalar = false;
                out.witness = "sub-twisted product orders disagree at window slot " +
                              std::to_string(k);
                continue;
            }
            if (!have) {
                out.z = p1;
                have = true;
            } else if (!(out.z == p1)) {
                out.window_scalar = false;
                out.witness = "sub-twisted product depends on the window slot";
            }
        }
    return out;
}

CheckResult eval_center_formula(const EvalAssignment& ev, const EvalGauss& g) {
    const auto& ctx = ev.ctx;
    CheckResult res;
    EvalCenter z = eval_center(ev);
    if (!z.scalar_ok) {
        res.fail(z.witness);
        return res;
    }
    const int n = ctx.n, N = ctx.N;
    const Rational kap = ctx.kappa();
    RFMat acc = RFMat::identity(N);
    const int lim = (ctx.kind == Kind::B) ? n : n - 1;
    for (int i = 1; i <= lim; ++i) acc = acc * rfm_inverse(rfm_shifted(g.h[i], kap - i));
    for (int i = 1; i <= n; ++i) acc = acc * rfm_shifted(g.h[i], kap - i + 1);
    acc = acc * g.h[n + 1];
    if (ctx.kind == Kind::B) acc = acc * rfm_shifted(g.h[n + 1], rat(-1, 2));
    if (!(acc == RFMat::identity(N) * z.z)) res.fail("shifted h product differs from z");
    return res;
}

} // namespace yangx
