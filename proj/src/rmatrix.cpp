#include "yangx/rmatrix.hpp"

namespace yangx {

using RF = RationalFunction;

bool r_defined_at(const AlgebraContext& ctx, const Rational& u0) {
    if (is_zero(u0)) return false;
    if (ctx.has_prime() && u0 == ctx.kappa()) return false;
    return true;
}

SparseQ r_at(const AlgebraContext& ctx, const Rational& u0) {
    assert(r_defined_at(ctx, u0));
    int N = ctx.N;
    SparseQ r = SparseQ::identity(N * N);
    SparseQ p = op_P<Rational>(N);
    r = r - p * (1 / u0);
    if (ctx.has_prime()) {
        SparseQ q = op_Q<Rational>(ctx);
        r = r + q * (1 / (u0 - ctx.kappa()));
    }
    return r;
}

SparseMat<RF> r_sym(const AlgebraContext& ctx, const Rational& shift) {
    int N = ctx.N;
    Poly u = Poly::var();
    SparseMat<RF> r = SparseMat<RF>::identity(N * N, RF(Rational(1)));
    RF inv_u(Poly(Rational(1)), u + Poly(shift));
    SparseQ p = op_P<Rational>(N);
    for (const auto& [rc, v] : p.e) r.add_entry(rc.first, rc.second, inv_u * (-v));
    if (ctx.has_prime()) {
        RF inv_uk(Poly(Rational(1)), u + Poly(shift - ctx.kappa()));
        SparseQ q = op_Q<Rational>(ctx);
        for (const auto& [rc, v] : q.e) r.add_entry(rc.first, rc.second, inv_uk * v);
    }
    return r;
}

SparseQ r_one_cleared(const AlgebraContext& ctx) {
    assert(ctx.has_prime());
    int N = ctx.N;
    Rational c = 1 - ctx.kappa();
    SparseQ g = (SparseQ::identity(N * N) - op_P<Rational>(N)) * c;
    return g + op_Q<Rational>(ctx);
}

CheckResult verify_ybe(const AlgebraContext& ctx, const Rational& a) {
    CheckResult res;
    int N = ctx.N;
    // cleared numerator degree: <= 2 per R factor per variable => 5 points
    // suffice in each variable; use 6 for margin
    const int PTS = 6;
    std::vector<Rational> us, vs;
    for (long i = 0; us.size() < PTS; ++i) {
        Rational u0 = 11 + 2 * i + a;
        if (r_defined_at(ctx, u0 - a)) us.push_back(u0);
    }
    for (long j = 0; vs.size() < PTS; ++j) {
        Rational v0 = rat(1, 3) + j + a;
        if (r_defined_at(ctx, v0 - a)) vs.push_back(v0);
    }
    for (const auto& u0 : us)
        for (const auto& v0 : vs) {
            if (!r_defined_at(ctx, u0 - v0)) continue;
            SparseQ r12 = place_legs(r_at(ctx, u0 - v0), {1, 2}, 3, N);
            SparseQ r13 = place_legs(r_at(ctx, u0 - a), {1, 3}, 3, N);
            SparseQ r23 = place_legs(r_at(ctx, v0 - a), {2, 3}, 3, N);
            SparseQ lhs = r12 * r13 * r23;
            SparseQ rhs = r23 * r13 * r12;
            if (!(lhs == rhs)) {
                res.fail(ctx.name() + " YBE fails at u=" + rat_str(u0) + " v=" + rat_str(v0));
                return res;
            }
        }
    return res;
}

CheckResult verify_fusion(const AlgebraContext& ctx) {
    CheckResult res;
    assert(ctx.has_prime());
    int N = ctx.N;
    int dim = N * N * N;
    Rational ka = ctx.kappa();
    Poly u = Poly::var();

    auto place_rf = [&](const SparseQ& m, std::vector<int> legs) {
        SparseMat<RF> s(m.rows, m.cols);
        for (const auto& [rc, v] : m.e) s.e[rc] = RF(Rational(v));
        return place_legs(s, legs, 3, N);
    };

    SparseMat<RF> g12 = place_rf(r_one_cleared(ctx), {1, 2});
    SparseMat<RF> r13 = place_legs(r_sym(ctx, Rational(0)), {1, 3}, 3, N);
    SparseMat<RF> r23 = place_legs(r_sym(ctx, Rational(-1)), {2, 3}, 3, N);

    SparseMat<RF> p13 = place_rf(op_P<Rational>(N), {1, 3});
    SparseMat<RF> p23 = place_rf(op_P<Rational>(N), {2, 3});
    SparseMat<RF> q12 = place_rf(op_Q<Rational>(ctx), {1, 2});
    SparseMat<RF> q13 = place_rf(op_Q<Rational>(ctx), {1, 3});
    SparseMat<RF> q23 = place_rf(op_Q<Rational>(ctx), {2, 3});

    RF inv_u1(Poly(Rational(1)), u - Poly(Rational(1)));        // 1/(u-1)
    RF inv_uk(Poly(Rational(1)), u - Poly(ka));                 // 1/(u-kappa)
    RF phi = ctx.orthogonal()
                 ? inv_u1 * inv_uk * (1 - rat(4, N))            // (1-4/N)/((u-1)(u-kappa))
                 : RF(Poly(Rational(1)), u * (u - Poly(ka + 1))); // 1/(u(u-kappa-1))

    SparseMat<RF> mid = SparseMat<RF>::identity(dim, RF(Rational(1)));
    mid = mid - (p13 + p23) * inv_u1 + (q13 + q23) * inv_uk;

    SparseMat<RF> mid_fus = mid - (p23 * q12) * (inv_u1 * inv_uk) - (p13 * q23) * phi;
    SparseMat<RF> mid_opp = mid - (q12 * p23) * (inv_u1 * inv_uk) - (q23 * p13) * phi;

    if (!(g12 * r13 * r23 == g12 * mid_fus))
        res.fail(ctx.name() + " fusion identity (direct form) fails");
    if (!(r23 * r13 * g12 == mid_opp * g12))
        res.fail(ctx.name() + " fusion identity (opposite form) fails");
    return res;
}

CheckResult verify_r_one_projector(const AlgebraContext& ctx) {
    CheckResult res;
    assert(ctx.has_prime());
    int N = ctx.N;
    SparseQ g = r_one_cleared(ctx);
    SparseQ pi = (SparseQ::identity(N * N) - op_P<Rational>(N)) * rat(1, 2);
    if (ctx.orthogonal()) pi = pi + op_Q<Rational>(ctx) * rat(1, N);
    if (!(pi * g == g)) res.fail(ctx.name() + " projector does not fix cleared R(1) on the left");
    if (!(g * pi == g)) res.fail(ctx.name() + " projector does not fix cleared R(1) on the right");
    return res;
}

} // namespace yangx
