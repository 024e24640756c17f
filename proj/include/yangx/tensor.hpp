#pragma once

// The two-leg operators P and Q entering the R-matrix, the prime
// transposition, and the Lie generators F_ij, for a BCD context.
//   P = sum e_ij (x) e_ji
//   Q = sum theta_ij e_ij (x) e_{i'j'}
// Key identities (tested): P^2 = 1, Q^2 = N Q, P Q = Q P = Q (orthogonal),
// P Q = Q P = -Q (symplectic); Q = P' in the prime transposition on leg 1.

#include "yangx/context.hpp"
#include "yangx/matrix.hpp"

namespace yangx {

template <class T>
SparseMat<T> op_P(int N) {
    SparseMat<T> p(N * N, N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) p.e[{flat_index({i, j}, N), flat_index({j, i}, N)}] = T(1);
    return p;
}

template <class T>
SparseMat<T> op_Q(const AlgebraContext& ctx) {
    assert(ctx.has_prime());
    int N = ctx.N;
    SparseMat<T> q(N * N, N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            T v = T(ctx.theta(i, j));
            q.add_entry(flat_index({i, ctx.prime(i)}, N), flat_index({j, ctx.prime(j)}, N), v);
        }
    return q;
}

// (X')_ij = theta_ij X_{j' i'}
inline QMat transpose_prime(const QMat& x, const AlgebraContext& ctx) {
    int N = ctx.N;
    assert(x.rows == N && x.cols == N);
    QMat r(N, N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            r.at(i, j) = Rational(ctx.theta(i, j)) * x.at(ctx.prime(j), ctx.prime(i));
    return r;
}

// F_ij = E_ij - theta_ij E_{j'i'}; spans o_N / sp_N
inline QMat lie_F(const AlgebraContext& ctx, int i, int j) {
    int N = ctx.N;
    QMat m(N, N);
    m.at(i, j) += 1;
    m.at(ctx.prime(j), ctx.prime(i)) -= Rational(ctx.theta(i, j));
    return m;
}

inline QMat mat_commutator(const QMat& a, const QMat& b) { return a * b - b * a; }

} // namespace yangx
