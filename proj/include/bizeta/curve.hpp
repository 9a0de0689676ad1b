#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "bizeta/finite_field.hpp"
#include "bizeta/rational.hpp"

namespace bizeta {

enum class CurveKind { elliptic, hyperelliptic_g2 };

/// Explicit model of a curve over F_q. Elliptic curves use the long
/// Weierstrass form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 (valid in
/// every characteristic); genus-2 curves use y^2 = f(x) with f monic of
/// degree 5, odd characteristic only. Coefficients are field-element codes
/// relative to `field`.
struct CurveModel {
    CurveKind kind = CurveKind::elliptic;
    FieldSpec field;
    long a1 = 0, a3 = 0, a2 = 0, a4 = 0, a6 = 0; // elliptic
    std::vector<long> f;                         // hyperelliptic: ascending, f[5] = 1

    int genus() const { return kind == CurveKind::elliptic ? 1 : 2; }
};

namespace detail {

/// gcd of two polynomials over F_q (coefficients ascending). Returns the
/// monic gcd; the zero polynomial is represented by an empty vector.
inline std::vector<long> fq_poly_gcd(const Field& F, std::vector<long> a, std::vector<long> b) {
    auto trim = [](std::vector<long>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        const long lead_inv = F.inv(b.back());
        while (a.size() >= b.size()) {
            const long c = F.mul(a.back(), lead_inv);
            const size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const long li = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, li);
    }
    return a;
}

inline long fq_poly_eval(const Field& F, const std::vector<long>& poly, long x) {
    long acc = 0;
    for (size_t i = poly.size(); i-- > 0;) acc = F.add(F.mul(acc, x), poly[i]);
    return acc;
}

} // namespace detail

/// Weierstrass discriminant of an elliptic model, computed in F_q with the
/// standard b2/b4/b6/b8 covariants (characteristic-independent).
inline long elliptic_discriminant(const Field& F, const CurveModel& c) {
    const long a1 = c.a1, a3 = c.a3, a2 = c.a2, a4 = c.a4, a6 = c.a6;
    auto i = [&](long n) { return F.from_int(n); };
    const long b2 = F.add(F.mul(a1, a1), F.mul(i(4), a2));
    const long b4 = F.add(F.mul(i(2), a4), F.mul(a1, a3));
    const long b6 = F.add(F.mul(a3, a3), F.mul(i(4), a6));
    const long b8 = F.sub(F.add(F.add(F.mul(F.mul(a1, a1), a6), F.mul(i(4), F.mul(a2, a6))),
                                F.sub(F.mul(a2, F.mul(a3, a3)), F.mul(F.mul(a1, a3), a4))),
                          F.mul(a4, a4));
    long d = F.neg(F.mul(F.mul(b2, b2), b8));
    d = F.sub(d, F.mul(i(8), F.mul(b4, F.mul(b4, b4))));
    d = F.sub(d, F.mul(i(27), F.mul(b6, b6)));
    d = F.add(d, F.mul(i(9), F.mul(b2, F.mul(b4, b6))));
    return d;
}

/// Validate the model's invariants: nonzero discriminant for elliptic,
/// squarefree f (gcd(f, f') = 1) and odd characteristic for genus 2.
inline void validate_curve(const Field& F, const CurveModel& c) {
    if (c.kind == CurveKind::elliptic) {
        if (elliptic_discriminant(F, c) == 0)
            throw std::domain_error("curve: singular Weierstrass model (discriminant = 0)");
        return;
    }
    if (F.p() == 2)
        throw std::domain_error("curve: hyperelliptic models require odd characteristic");
    if (c.f.size() != 6 || c.f[5] != F.one())
        throw std::domain_error("curve: hyperelliptic f must be monic of degree 5");
    std::vector<long> df(5, 0);
    for (int i = 1; i <= 5; ++i) df[static_cast<size_t>(i - 1)] = F.mul(F.from_int(i), c.f[static_cast<size_t>(i)]);
    const auto g = detail::fq_poly_gcd(F, c.f, df);
    if (g.size() != 1)
        throw std::domain_error("curve: f has a repeated root (gcd(f, f') != 1)");
}

/// |X(F_{q^m})| by exhaustive enumeration: affine solutions of the model plus
/// the single point at infinity (both supported models have exactly one).
inline long count_points(const CurveModel& c, int m = 1) {
    const Field base(c.field);
    validate_curve(base, c);
    if (m < 1 || c.field.m * m > 4)
        throw std::domain_error("curve: extension degree out of the supported range");

    const Field& ext = (m == 1) ? base : cached_field(c.field.p, c.field.m * m);
    const auto emb = (m == 1) ? std::vector<long>{} : base.embedding_into(ext);
    auto lift = [&](long e) { return m == 1 ? e : emb[static_cast<size_t>(e)]; };

    long count = 1; // point at infinity
    if (c.kind == CurveKind::elliptic) {
        const long a1 = lift(c.a1), a3 = lift(c.a3), a2 = lift(c.a2), a4 = lift(c.a4), a6 = lift(c.a6);
        for (long x = 0; x < ext.q(); ++x) {
            const long x2 = ext.mul(x, x);
            const long rhs = ext.add(ext.add(ext.mul(x2, x), ext.mul(a2, x2)),
                                     ext.add(ext.mul(a4, x), a6));
            const long lin = ext.add(ext.mul(a1, x), a3); // y^2 + lin*y = rhs
            for (long y = 0; y < ext.q(); ++y)
                if (ext.add(ext.mul(y, y), ext.mul(lin, y)) == rhs) ++count;
        }
    } else {
        std::vector<long> f(c.f.size());
        for (size_t i = 0; i < c.f.size(); ++i) f[i] = lift(c.f[i]);
        for (long x = 0; x < ext.q(); ++x)
            count += ext.sqrt_count(detail::fq_poly_eval(ext, f, x));
    }
    return count;
}

/// Point counts N_1..N_g with the Hasse-Weil sanity window
/// |N_m - (q^m + 1)| <= 2 g q^{m/2}, checked exactly as
/// (N_m - q^m - 1)^2 <= 4 g^2 q^m.
struct PointCounts {
    long q = 0;
    int g = 0;
    std::vector<long> n; // n[i] = N_{i+1}, i = 0..g-1
};

inline void check_hasse_window(const PointCounts& pc) {
    for (int m = 1; m <= pc.g; ++m) {
        const long nm = pc.n[static_cast<size_t>(m - 1)];
        if (nm < 0) throw std::domain_error("point counts: negative N_" + std::to_string(m));
        Int qm = pow(Int(pc.q), static_cast<unsigned long>(m));
        Int dev = Int(nm) - qm - 1;
        if (dev * dev > 4 * Int(pc.g) * Int(pc.g) * qm)
            throw std::domain_error("point counts: N_" + std::to_string(m) +
                                    " violates the Hasse-Weil window (counting bug?)");
    }
}

inline PointCounts point_counts(const CurveModel& c) {
    PointCounts pc;
    Field base(c.field);
    pc.q = base.q();
    pc.g = c.genus();
    for (int m = 1; m <= pc.g; ++m) pc.n.push_back(count_points(c, m));
    check_hasse_window(pc);
    return pc;
}

} // namespace bizeta
