#pragma once

// The rational R-matrix R(u) = 1 - P/u + Q/(u - kappa) (types B, C, D) and
// R(u) = 1 - P/u (type A), with exact verification of the Yang-Baxter
// equation and of the two fusion identities at v = u - 1.
//
// Bivariate checks (YBE, shifted-argument RTT) are decided on a rational
// grid that strictly exceeds the denominator-cleared degree bound in each
// variable; univariate checks (fusion) are done directly in Q(u).
//
// R(1) is singular when kappa = 1 (o_4). All identities involving R(1) are
// therefore checked multiplied through by (1 - kappa): the finite operator
// (1-kappa)(1-P) + Q replaces (1-kappa) R(1), which changes nothing for
// kappa != 1 and regularizes the o_4 case.

#include "yangx/context.hpp"
#include "yangx/matrix.hpp"
#include "yangx/poly.hpp"
#include "yangx/tensor.hpp"

#include <optional>
#include <string>

namespace yangx {

// R(u0) at a rational point; u0 != 0 and (BCD) u0 != kappa
SparseQ r_at(const AlgebraContext& ctx, const Rational& u0);

// R(u + shift) with symbolic u
SparseMat<RationalFunction> r_sym(const AlgebraContext& ctx, const Rational& shift);

// (1-kappa)(1-P) + Q; equals (1-kappa) R(1) when kappa != 1
SparseQ r_one_cleared(const AlgebraContext& ctx);

// true when u0 avoids the poles of R
bool r_defined_at(const AlgebraContext& ctx, const Rational& u0);

struct CheckResult {
    bool pass = true;
    std::string witness; // first failure, empty on pass

    void fail(const std::string& w) {
        if (pass) witness = w;
        pass = false;
    }
};

// R12(u-v) R13(u-a) R23(v-a) = R23(v-a) R13(u-a) R12(u-v) on a grid
// exceeding the cleared degree bound (a = 0 gives the plain YBE).
CheckResult verify_ybe(const AlgebraContext& ctx, const Rational& a = Rational(0));

// both fusion identities, exact in Q(u), in the (1-kappa)-cleared form
CheckResult verify_fusion(const AlgebraContext& ctx);

// ((1-P)/2 + Q/N) (orthogonal) resp. (1-P)/2 (symplectic) fixes the cleared
// R(1) under multiplication from either side
CheckResult verify_r_one_projector(const AlgebraContext& ctx);

} // namespace yangx
