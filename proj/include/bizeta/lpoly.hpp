#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bizeta/curve.hpp"
#include "bizeta/unipoly.hpp"

namespace bizeta {

/// Numerator of the classical zeta function Z(t) = L(t)/((1-t)(1-qt)),
/// deg L = 2g, L(0) = 1, with the functional-equation symmetry
/// c_{2g-i} = q^{g-i} c_i. h = L(1) is the class number.
struct LPoly {
    UniPoly L = UniPoly::zero(Var::t);
    long q = 0;
    int g = 0;
    Int h = 0;

    /// g = 2 accessors for the paper-style parametrization
    /// L = 1 + a t + b t^2 + qa t^3 + q^2 t^4.
    Int a() const { return L.coeff(1).to_int(); }
    Int b() const { return L.coeff(2).to_int(); }
};

inline Int class_number(const LPoly& lp) { return lp.L.eval(Rat(1)).to_int(); }

inline void check_lpoly_symmetry(const LPoly& lp) {
    if (lp.L.coeff(0) != Rat(1)) throw std::domain_error("LPoly: L(0) != 1");
    if (!lp.L.is_zero() && lp.L.degree() > 2 * lp.g)
        throw std::domain_error("LPoly: degree exceeds 2g");
    for (int i = 0; i <= lp.g; ++i) {
        const Rat lhs = lp.L.coeff(2 * lp.g - i);
        const Rat rhs = pow(Rat(lp.q), static_cast<unsigned long>(lp.g - i)) * lp.L.coeff(i);
        if (lhs != rhs)
            throw std::domain_error("LPoly: functional-equation symmetry fails at i=" + std::to_string(i));
    }
}

/// Recover L(t) from the point counts N_1..N_g. The truncation of
/// L = (1-t)(1-qt) exp(sum N_m t^m / m) is computed exactly over Q up to
/// degree g; the upper half is filled in through the functional equation.
/// Non-integral coefficients or h <= 0 signal inconsistent counts.
inline LPoly l_polynomial(const PointCounts& counts, long q, int g) {
    if (static_cast<int>(counts.n.size()) < g)
        throw std::domain_error("l_polynomial: need counts N_1..N_g");

    // E = exp(S) mod t^{g+1} via n E_n = sum_{k=1}^{n} k S_k E_{n-k}.
    std::vector<Rat> E(static_cast<size_t>(g) + 1, Rat(0));
    E[0] = Rat(1);
    for (int n = 1; n <= g; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) {
            const Rat sk = Rat(counts.n[static_cast<size_t>(k - 1)], k); // S_k = N_k / k
            acc += Rat(k) * sk * E[static_cast<size_t>(n - k)];
        }
        E[static_cast<size_t>(n)] = acc / Rat(n);
    }

    // Multiply by (1-t)(1-qt) = 1 - (q+1) t + q t^2, truncated at degree g.
    std::vector<Rat> c(static_cast<size_t>(2 * g) + 1, Rat(0));
    for (int n = 0; n <= g; ++n) {
        Rat v = E[static_cast<size_t>(n)];
        if (n >= 1) v -= Rat(q + 1) * E[static_cast<size_t>(n - 1)];
        if (n >= 2) v += Rat(q) * E[static_cast<size_t>(n - 2)];
        c[static_cast<size_t>(n)] = v;
    }
    for (int i = 0; i < g; ++i)
        c[static_cast<size_t>(2 * g - i)] = pow(Rat(q), static_cast<unsigned long>(g - i)) * c[static_cast<size_t>(i)];

    LPoly lp;
    lp.q = q;
    lp.g = g;
    lp.L = UniPoly(Var::t, std::move(c));
    if (!lp.L.all_integer())
        throw std::domain_error("l_polynomial: non-integral coefficient (inconsistent counts)");
    check_lpoly_symmetry(lp);
    lp.h = class_number(lp);
    if (lp.h <= 0)
        throw std::domain_error("l_polynomial: h = L(1) <= 0 (counting bug)");
    return lp;
}

} // namespace bizeta
