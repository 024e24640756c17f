#pragma once

// Algebra contexts for the RTT algebras handled here:
//   B: o_{2n+1}, C: sp_{2n}, D: o_{2n}, plus the gl_n case A used as a
//   target for the low-rank maps and as a supporting engine.
// Indices are 1-based throughout; i' = N - i + 1.

#include "yangx/rational.hpp"

#include <string>
#include <vector>

namespace yangx {

enum class Kind { A, B, C, D };

inline char kind_char(Kind k) {
    switch (k) {
        case Kind::A: return 'A';
        case Kind::B: return 'B';
        case Kind::C: return 'C';
        case Kind::D: return 'D';
    }
    return '?';
}

struct AlgebraContext {
    Kind kind = Kind::A;
    int n = 1; // rank; for A this is the gl rank and N = n
    int N = 1;

    static AlgebraContext make(Kind k, int n) {
        AlgebraContext c;
        c.kind = k;
        c.n = n;
        switch (k) {
            case Kind::A: c.N = n; break;
            case Kind::B: c.N = 2 * n + 1; break;
            case Kind::C:
            case Kind::D: c.N = 2 * n; break;
        }
        assert(c.n >= 1);
        return c;
    }

    bool orthogonal() const { return kind == Kind::B || kind == Kind::D; }
    bool symplectic() const { return kind == Kind::C; }
    bool has_prime() const { return kind != Kind::A; }

    int prime(int i) const {
        assert(has_prime() && i >= 1 && i <= N);
        return N - i + 1;
    }

    int eps(int i) const {
        assert(i >= 1 && i <= N);
        if (!symplectic()) return 1;
        return i <= n ? 1 : -1;
    }

    int theta(int i, int j) const { return symplectic() ? eps(i) * eps(j) : 1; }

    // pole of the second R-matrix term: N/2 - 1 orthogonal, N/2 + 1 symplectic
    Rational kappa() const {
        assert(has_prime());
        Rational half_N = rat(N, 2);
        return symplectic() ? Rational(half_N + 1) : Rational(half_N - 1);
    }

    std::string name() const {
        return std::string(1, kind_char(kind)) + std::to_string(n) + "(N=" + std::to_string(N) + ")";
    }

    bool operator==(const AlgebraContext& o) const { return kind == o.kind && n == o.n; }
};

// Simple roots in the epsilon basis, (eps_i, eps_j) = delta_ij.
//   alpha_i = eps_i - eps_{i+1} for i < n;
//   alpha_n = eps_n (B), 2 eps_n (C), eps_{n-1} + eps_n (D).
// For A (gl_n): alpha_i = eps_i - eps_{i+1}, i = 1..n-1.
struct RootData {
    int rank = 0;                        // number of simple roots
    int dim = 0;                         // epsilon-space dimension
    std::vector<std::vector<long>> alpha; // alpha[i-1] has dim entries

    static RootData make(const AlgebraContext& ctx) {
        RootData rd;
        int n = ctx.n;
        rd.dim = n;
        rd.rank = (ctx.kind == Kind::A) ? n - 1 : n;
        rd.alpha.assign(rd.rank, std::vector<long>(rd.dim, 0));
        for (int i = 1; i < n; ++i) {
            rd.alpha[i - 1][i - 1] = 1;
            rd.alpha[i - 1][i] = -1;
        }
        if (ctx.kind == Kind::B) {
            rd.alpha[n - 1][n - 1] = 1;
        } else if (ctx.kind == Kind::C) {
            rd.alpha[n - 1][n - 1] = 2;
        } else if (ctx.kind == Kind::D) {
            assert(n >= 2);
            rd.alpha[n - 1][n - 2] = 1;
            rd.alpha[n - 1][n - 1] = 1;
        }
        return rd;
    }

    long pair(int i, int j) const { // (alpha_i, alpha_j)
        assert(i >= 1 && i <= rank && j >= 1 && j <= rank);
        long s = 0;
        for (int t = 0; t < dim; ++t) s += alpha[i - 1][t] * alpha[j - 1][t];
        return s;
    }

    long eps_pair(int i, int j) const { // (eps_i, alpha_j)
        assert(i >= 1 && i <= dim && j >= 1 && j <= rank);
        return alpha[j - 1][i - 1];
    }

    // Cartan matrix, row convention: a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
    long cartan(int i, int j) const {
        long num = 2 * pair(i, j);
        long d = pair(i, i);
        assert(num % d == 0);
        return num / d;
    }
};

} // namespace yangx
