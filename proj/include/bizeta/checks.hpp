#pragma once

#include <string>

#include "bizeta/alpha.hpp"
#include "bizeta/bipoly.hpp"
#include "bizeta/btable.hpp"
#include "bizeta/report.hpp"
#include "bizeta/zeta.hpp"

namespace bizeta {

/// Run the full battery of structural checks on P(t,u):
///   T1-deg    deg_t P = 2g and deg_u P = g
///   T1-P0     P_0 = 1
///   T1-bound  deg_u P_i <= floor(i/2) + 1
///   T1-FE     P_{2g-i}(u) = u^{g-i} P_i(u) for 0 <= i <= g
///   T1-h      P(1, u0) = h at u0 = 0,1,2,3 and symbolically in u
///   T1-spec   P(t, q) = L(t) when the classical L-polynomial is attached
///   P12       alpha_11 = -1 (g >= 1) and alpha_22 = 0 (g >= 2)
///   LEAD      coefficient of u^g in t^{2g} P(1/t, u) equals 1 - t
/// Failures never throw; each lands in the report with witness data.
inline CheckReport verify_theorem1(const PPoly& p) {
    CheckReport report;
    const BiPoly& P = p.poly;
    const int g = p.g;

    report.add("T1-deg", P.deg_t() == 2 * g && P.deg_u() == g,
               "deg_t=" + std::to_string(P.deg_t()) + " deg_u=" + std::to_string(P.deg_u()) +
                   " expected (" + std::to_string(2 * g) + "," + std::to_string(g) + ")");

    report.add("T1-P0", P.coeff_t(0) == UniPoly::one(Var::u), "P_0 != 1");

    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i <= P.deg_t() && ok; ++i)
            if (P.coeff_t(i).degree() > i / 2 + 1) {
                ok = false;
                witness = "deg_u P_" + std::to_string(i) + " = " +
                          std::to_string(P.coeff_t(i).degree()) + " > " + std::to_string(i / 2 + 1);
            }
        report.add("T1-bound", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i <= g && ok; ++i) {
            const UniPoly lhs = P.coeff_t(2 * g - i);
            const UniPoly rhs = UniPoly::monomial(Var::u, Rat(1), g - i) * P.coeff_t(i);
            if (lhs != rhs) {
                ok = false;
                witness = "P_{2g-i} != u^{g-i} P_i at i=" + std::to_string(i);
            }
        }
        report.add("T1-FE", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (int u0 = 0; u0 <= 3 && ok; ++u0) {
            const Rat v = eval_point(P, Rat(1), Rat(u0));
            if (v != Rat(p.h)) {
                ok = false;
                witness = "P(1," + std::to_string(u0) + ") = " + v.str() + " != h = " + p.h.get_str();
            }
        }
        const UniPoly at_t1 = specialize_t(P, Rat(1));
        if (ok && at_t1 != UniPoly::constant(Var::u, Rat(p.h))) {
            ok = false;
            witness = "P(1,u) is not the constant h";
        }
        report.add("T1-h", ok, witness);
    }

    if (p.L) {
        const UniPoly spec = specialize_u(P, Rat(p.q));
        report.add("T1-spec", spec == p.L->L, "P(t,q) != L(t)");
    }

    {
        bool ok = true;
        std::string witness;
        if (g >= 1 && P.coeff(1, 1) != Rat(-1)) {
            ok = false;
            witness = "alpha_11 = " + P.coeff(1, 1).str() + " != -1";
        }
        if (g >= 2 && P.coeff(2, 2) != Rat(0)) {
            ok = false;
            witness = "alpha_22 = " + P.coeff(2, 2).str() + " != 0";
        }
        if (g >= 1) report.add("P12", ok, witness);
    }

    if (g >= 1) {
        bool ok = true;
        std::string witness;
        if (P.deg_t() > 2 * g) {
            ok = false;
            witness = "deg_t exceeds 2g, reversal undefined";
        } else {
            const BiPoly F = reverse_t(P, 2 * g);
            const UniPoly lead = F.coeff_u(g);
            const UniPoly one_minus_t(Var::t, {Rat(1), Rat(-1)});
            if (lead != one_minus_t) {
                ok = false;
                witness = "leading u-coefficient of reversal is not 1 - t";
            }
        }
        report.add("LEAD", ok, witness);
    }

    return report;
}

/// Clifford validation of a b-table: a special divisor class (degree n with
/// 1 <= n <= 2g-2 and h^0 = k >= 2) must satisfy 2(k-1) <= n, and degree 0
/// admits no class with h^0 >= 2. In particular b_{1,2} = b_{2,3} = 0 for
/// g = 2. Violations are reported with their (n,k) cell.
inline CheckReport clifford_validate(const BTable& bt) {
    CheckReport report;
    for (long k = 2; k <= bt.g + 2; ++k)
        report.add("clifford-n0-k" + std::to_string(k), bt.b(0, k) == 0,
                   "b_{0," + std::to_string(k) + "} = " + bt.b(0, k).get_str());
    for (long n = 1; n <= 2 * bt.g - 2; ++n)
        for (long k = 2; k <= bt.g + 2; ++k) {
            const bool bound_ok = 2 * (k - 1) <= n;
            report.add("clifford-n" + std::to_string(n) + "-k" + std::to_string(k),
                       bound_ok || bt.b(n, k) == 0,
                       "b_{" + std::to_string(n) + "," + std::to_string(k) + "} = " +
                           bt.b(n, k).get_str() + " violates 2(k-1) <= n");
        }
    return report;
}

} // namespace bizeta
