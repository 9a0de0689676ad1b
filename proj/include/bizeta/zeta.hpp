#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "bizeta/bipoly.hpp"
#include "bizeta/btable.hpp"
#include "bizeta/lpoly.hpp"

namespace bizeta {

/// The two-variable zeta numerator P(t,u) together with the context needed
/// to verify it: Z(t,u) = P(t,u) / ((1-t)(1-ut)).
struct PPoly {
    BiPoly poly;
    int g = 0;
    long q = 0;
    Int h = 1;
    std::optional<LPoly> L;
};

inline void validate_ppoly(const PPoly& p) {
    if (p.poly.deg_t() != 2 * p.g)
        throw std::domain_error("PPoly: deg_t must equal 2g");
    if (p.poly.deg_u() != p.g)
        throw std::domain_error("PPoly: deg_u must equal g");
    if (p.poly.coeff_t(0) != UniPoly::one(Var::u))
        throw std::domain_error("PPoly: constant term must be 1");
    if (!p.poly.all_integer())
        throw std::domain_error("PPoly: coefficients must be integers");
}

/// (1-t)(1-ut) as a BiPoly: 1 - (1+u) t + u t^2.
inline BiPoly one_minus_t_one_minus_ut() {
    return BiPoly({UniPoly::one(Var::u),
                   UniPoly(Var::u, {Rat(-1), Rat(-1)}),
                   UniPoly::monomial(Var::u, Rat(1), 1)});
}

/// Closed form of (1-t)(1-ut) * sum_{n >= n0} [n+1-g]_u t^n, the tail of the
/// zeta series from where Riemann-Roch pins h^0. Equals
/// [u^{1-g} (ut)^{n0} (1-t) - t^{n0} (1-ut)] / (u-1); the u^{1-g} prefactor
/// is cleared by u^{g-1} first and both divisions are asserted exact.
inline BiPoly tail_poly(int g, int n0) {
    if (n0 < 1) throw std::domain_error("tail_poly: n0 must be >= 1");
    const int clear = std::max(g - 1, 0);
    // u^{g-1} * u^{1-g} (ut)^{n0} (1-t) = u^{n0 + 1 - g + clear} t^{n0} (1-t)
    const int e1 = n0 + 1 - g + clear;
    const BiPoly first = (BiPoly::monomial(Rat(1), n0, e1) - BiPoly::monomial(Rat(1), n0 + 1, e1));
    const BiPoly second = BiPoly::monomial(Rat(1), n0, clear) -
                          BiPoly::monomial(Rat(1), n0 + 1, clear + 1);
    const BiPoly numerator = first - second;

    const UniPoly u_minus_1(Var::u, {Rat(-1), Rat(1)});
    BiPoly result = numerator.exact_div_u(u_minus_1); // throws if not divisible
    if (clear > 0)
        result = result.exact_div_u(UniPoly::monomial(Var::u, Rat(1), clear));
    return result;
}

/// Assemble P(t,u) = (1-t)(1-ut) Z(t,u) from a b-table:
/// the finite rows contribute (1-t)(1-ut) * sum_n z_n(u) t^n with
/// z_n = sum_k b_{nk} [k]_u, and the Riemann-Roch tail contributes
/// h * tail_poly. Everything is exact; a failed division by (u-1) means the
/// table is inconsistent.
inline PPoly p_from_btable(const BTable& bt) {
    validate_btable(bt);
    const int n0 = bt.tail_start();

    BiPoly finite_part = BiPoly::zero();
    for (int n = 0; n < n0 && n <= bt.finite_max_n(); ++n) {
        UniPoly zn = UniPoly::zero(Var::u);
        const auto& row = bt.finite[static_cast<size_t>(n)];
        for (size_t k = 1; k < row.size(); ++k)
            if (row[k] != 0)
                zn = zn + Rat(row[k]) * gauss_poly(static_cast<int>(k));
        finite_part = finite_part + BiPoly::term(zn, n);
    }

    BiPoly P = one_minus_t_one_minus_ut() * finite_part + tail_poly(bt.g, n0) * Rat(bt.h);

    PPoly result;
    result.poly = P;
    result.g = bt.g;
    result.q = bt.q;
    result.h = bt.h;
    validate_ppoly(result);
    return result;
}

/// Direct transcription of the displayed genus-1 polynomial
/// P(t,u) = 1 + (N-1-u) t + u t^2.
inline PPoly p_explicit_g1(long q, const Int& N, bool synthetic = false) {
    if (!synthetic && N < 1)
        throw std::domain_error("p_explicit: N >= 1 fails; pass synthetic for the N = 0 boundary");
    PPoly p;
    p.g = 1;
    p.q = q;
    p.h = N;
    p.poly = BiPoly({UniPoly::one(Var::u),
                     UniPoly(Var::u, {Rat(N - 1), Rat(-1)}),
                     UniPoly::monomial(Var::u, Rat(1), 1)});
    validate_ppoly(p);
    return p;
}

/// Direct transcription of the displayed genus-2 polynomial
/// P(t,u) = 1 + ((a+q)-u) t + ((q(q-1)+aq+b) - (a+q-1)u) t^2
///        + ((a+q)-u) u t^3 + u^2 t^4.
inline PPoly p_explicit_g2(long q, const Int& a, const Int& b, bool synthetic = false) {
    const Int h = b + a * (q + 1) + Int(q) * q + 1;
    if (!synthetic && h < 1)
        throw std::domain_error("p_explicit: h < 1 fails; pass synthetic for the h = 0 boundary");
    PPoly p;
    p.g = 2;
    p.q = q;
    p.h = h;
    const UniPoly p1(Var::u, {Rat(a + q), Rat(-1)});
    const UniPoly p2(Var::u, {Rat(Int(q) * (q - 1) + a * q + b), Rat(-(a + q - 1))});
    const UniPoly p3(Var::u, {Rat(0), Rat(a + q), Rat(-1)});
    p.poly = BiPoly({UniPoly::one(Var::u), p1, p2, p3, UniPoly::monomial(Var::u, Rat(1), 2)});
    validate_ppoly(p);
    return p;
}

/// Genus 0: P = 1.
inline PPoly p_explicit_g0(long q) {
    PPoly p;
    p.g = 0;
    p.q = q;
    p.h = 1;
    p.poly = BiPoly::one();
    validate_ppoly(p);
    return p;
}

} // namespace bizeta
