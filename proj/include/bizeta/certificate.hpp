#pragma once

#include <stdexcept>
#include <string>

#include "bizeta/bipoly.hpp"
#include "bizeta/factor.hpp"
#include "bizeta/zeta.hpp"

namespace bizeta {

enum class Conclusion { IrreducibleOverC_of_u, Inconclusive };

inline const char* conclusion_name(Conclusion c) {
    return c == Conclusion::IrreducibleOverC_of_u ? "IrreducibleOverC_of_u" : "Inconclusive";
}

/// Why a successful certificate is valid over C(u) even though every check
/// ran in exact rational arithmetic: a degree-1 polynomial stays irreducible
/// and a nonzero constant stays nonzero under any field extension.
inline constexpr const char* kNoteFieldExtension =
    "conditions persist under field extension: degree-1 lead stays irreducible, nonzero constant beta stays nonzero";

/// Why the conclusion for the reversal transfers back to the original P.
inline constexpr const char* kNoteReversalTransfer =
    "P(0,u) = 1 != 0, so irreducibility of the reversal transfers to P";

/// Machine-checkable irreducibility certificate. `conclusion` is
/// IrreducibleOverC_of_u only when every condition of the criterion was
/// verified: F monic in t, leading u-coefficient of degree 1 in t, and
/// F(t=alpha) a nonzero constant beta. Anything else is Inconclusive with
/// `reason` naming the first condition that failed.
struct Certificate {
    BiPoly F;
    UniPoly lead = UniPoly::zero(Var::t); // coefficient of u^{deg_u F}, a polynomial in t
    Rat alpha = Rat(0);
    Rat beta = Rat(0); // meaningful only when reason is "ok" or "value-zero"
    bool monic = false;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::string reason; // "ok" | "not-monic-in-t" | "lead-degenerate" | "lead-reducible" | "lead-not-linear" | "value-not-constant" | "value-zero"
    std::string note;

    bool ok() const { return conclusion == Conclusion::IrreducibleOverC_of_u; }
};

/// Check the three-condition irreducibility criterion on F at substitution
/// point t = alpha. Never throws on bad input: every failure mode returns an
/// Inconclusive certificate with a reason code.
///
/// Condition 2 is accepted outright when the leading u-coefficient has
/// degree 1 in t (irreducible over every field). A lead of higher degree is
/// factored over Q as a diagnostic, but cannot support the conclusion over
/// C(u) either way, since no polynomial of degree >= 2 is irreducible
/// over C.
inline Certificate irrcrit_certificate(const BiPoly& F, const Rat& alpha) {
    Certificate cert;
    cert.F = F;
    cert.alpha = alpha;

    const int dt = F.deg_t();
    cert.monic = dt >= 1 && F.coeff_t(dt) == UniPoly::one(Var::u);
    if (!cert.monic) {
        cert.reason = "not-monic-in-t";
        return cert;
    }

    const int du = F.deg_u();
    if (du <= 0) {
        cert.reason = "lead-degenerate";
        return cert;
    }
    cert.lead = F.coeff_u(du);
    if (cert.lead.degree() == 0) {
        cert.reason = "lead-degenerate";
        return cert;
    }
    if (cert.lead.degree() != 1) {
        cert.reason = cert.lead.degree() <= 4 && !detail::unipoly_irreducible_q(cert.lead)
                          ? "lead-reducible"
                          : "lead-not-linear";
        return cert;
    }

    const UniPoly value = specialize_t(F, alpha); // polynomial in u
    if (value.degree() > 0) {
        cert.reason = "value-not-constant";
        return cert;
    }
    cert.beta = value.coeff(0);
    if (cert.beta.is_zero()) {
        cert.reason = "value-zero";
        return cert;
    }

    cert.conclusion = Conclusion::IrreducibleOverC_of_u;
    cert.reason = "ok";
    cert.note = kNoteFieldExtension;
    return cert;
}

/// Certify irreducibility of P(t,u) in C(u)[t] by running the criterion on
/// the monic reversal F = t^{2g} P(1/t, u) at alpha = 1, where the value is
/// the class number h. On success the certificate additionally records that
/// the conclusion transfers from F back to P.
///
/// Internal consistency: a successful certificate must have lead = 1 - t
/// and beta = h; any other outcome indicates a bug upstream and throws.
inline Certificate certify_p(const PPoly& p) {
    validate_ppoly(p);
    if (p.g < 1) throw std::domain_error("certify_p: genus 0 has no irreducibility content (P = 1)");

    const BiPoly F = reverse_t(p.poly, 2 * p.g);
    Certificate cert = irrcrit_certificate(F, Rat(1));
    if (cert.ok()) {
        const UniPoly one_minus_t(Var::t, {Rat(1), Rat(-1)});
        if (!(cert.lead == one_minus_t))
            throw std::logic_error("certify_p: leading coefficient is not 1 - t");
        if (cert.beta != Rat(p.h))
            throw std::logic_error("certify_p: beta does not equal the class number");
        cert.note = std::string(kNoteFieldExtension) + "; " + kNoteReversalTransfer;
    }
    return cert;
}

/// The necessary condition for a genus-2 numerator to be reducible:
/// b + a(q+1) + (q^2+1) = 0. For parameters coming from an actual curve this
/// expression equals the class number h >= 1, so it never vanishes there.
inline bool g2_reducibility_condition(long q, const Int& a, const Int& b) {
    return b + a * (q + 1) + (Int(q) * q + 1) == 0;
}

} // namespace bizeta
