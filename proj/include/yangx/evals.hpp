#pragma once

// Evaluation backend. The assignment t_ij(u) -> (i,j)-slice of R(u-a)
// satisfies the defining relation because of the Yang-Baxter equation with
// shifted arguments, so every identity of the algebra pushes forward to an
// exact identity of rational-function matrices. Letter images t_ij^(r) are
// the u^{-r} coefficients of the slices: plain rational matrices, and any
// polynomial in the generators evaluates to one by multiplicativity.
//
// The oracle can only falsify: elements that evaluate equally may still
// differ in the algebra. The abstract engine decides equality; agreement
// of the two backends is what the soundness checks certify.

#include "yangx/context.hpp"
#include "yangx/matrix.hpp"
#include "yangx/ncpoly.hpp"
#include "yangx/poly.hpp"
#include "yangx/rmatrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace yangx {

using RFMat = DMat<RationalFunction>;

struct EvalAssignment {
    AlgebraContext ctx;
    Rational a;
    int Kmax = 0;
    std::vector<RFMat> slice;          // (i-1)*N + (j-1) -> image of t_ij(u)
    std::vector<std::vector<QMat>> img; // [r-1][(i-1)*N + (j-1)]
    std::map<uint32_t, Rational> central_values; // packed central symbol -> value

    const RFMat& t_series(int i, int j) const { return slice[(size_t)(i - 1) * ctx.N + (j - 1)]; }
    const QMat& t_img(int i, int j, int r) const {
        assert(r >= 1 && r <= Kmax);
        return img[r - 1][(size_t)(i - 1) * ctx.N + (j - 1)];
    }
};

// Build the assignment with letter images up to superscript Kmax. With
// check_rtt the backing shifted Yang-Baxter instance is verified first;
// skip it only where the same (ctx, a) instance was already checked.
EvalAssignment build_eval(const AlgebraContext& ctx, const Rational& a, int Kmax, bool check_rtt = true);

// image of one word: the matrix product of the letter images; the unit
// word gives the identity. Central letters take their scalar value from
// central_values and must be present there.
QMat eval_word(const EvalAssignment& ev, const Word& w);

inline Rational coeff_rational(const RatC& c) { return c.v; }
inline Rational coeff_rational(const QuadExt& c) {
    assert(c.is_rational());
    return c.a;
}

template <class C>
QMat eval_ncpoly(const EvalAssignment& ev, const NCPoly<C>& x) {
    QMat acc(ev.ctx.N, ev.ctx.N);
    for (const auto& [w, c] : x.terms) acc = acc + eval_word(ev, w) * coeff_rational(c);
    return acc;
}

// entrywise argument shift u -> u + c
RFMat rfm_shifted(const RFMat& m, const Rational& c);

// inverse over the rational-function field; asserts invertibility
RFMat rfm_inverse(const RFMat& m);

// Gauss data pushed through the evaluation: block LDU of the N x N grid of
// slices by Schur complements. Same keying as the abstract side.
struct EvalGauss {
    int N = 0;
    std::vector<RFMat> h;                            // 1-based, h[0] unused
    std::map<std::pair<int, int>, RFMat> e, f;

    const RFMat& e_at(int i, int j) const {
        auto it = e.find({i, j});
        assert(it != e.end());
        return it->second;
    }
    const RFMat& f_at(int j, int i) const {
        auto it = f.find({j, i});
        assert(it != f.end());
        return it->second;
    }
};

// with check the product F H E is multiplied back and compared to the slices
EvalGauss eval_gauss(const EvalAssignment& ev, bool check = true);

// boxed quasideterminant over the top-left m-block, evaluated
RFMat eval_boxed(const EvalAssignment& ev, int m, int i, int j);

// scalar z(u) of the twisted product T'(u + kappa) T(u) in both orders
struct EvalCenter {
    RationalFunction z;
    bool scalar_ok = true;
    std::string witness;
};
EvalCenter eval_center(const EvalAssignment& ev);

// z(u) against the alternating product of shifted h_i
CheckResult eval_center_formula(const EvalAssignment& ev, const EvalGauss& g);

// boxed entry through the Gauss data: t_ij minus sum_{k<=m} f_ik h_k e_kj;
// avoids the block inverse, which matters for larger N
RFMat eval_boxed_via_gauss(const EvalAssignment& ev, const EvalGauss& g, int m, int i, int j);

// The window family s_ab = boxed(m, m+a, m+b) satisfies the defining
// relation of the rank n-m algebra of the same kind. Decided exactly: the
// kernel-cleared identity is polynomial, so sampling a grid that exceeds
// its degree bounds in u and v is a proof.
CheckResult eval_sub_rtt(const EvalAssignment& ev, int m);

// z^[m](u) of the window family: the sub-twisted products in both orders
// must be diagonal over the window with one common N x N image z
struct EvalSubCenter {
    RFMat z;
    bool window_scalar = true;
    std::string witness;
};
EvalSubCenter eval_sub_center(const EvalAssignment& ev, int m);

} // namespace yangx
