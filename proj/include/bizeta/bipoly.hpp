#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bizeta/unipoly.hpp"

namespace bizeta {

/// Bivariate polynomial in Q[u][t]: a dense list of UniPoly-in-u entries
/// indexed by the t-exponent. Canonical form: the highest t-index holds a
/// nonzero entry. Degrees are recomputed on demand, never cached.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> t_coeffs) : c_(std::move(t_coeffs)) {
        for (const auto& e : c_)
            if (e.var() != Var::u) throw std::logic_error("BiPoly: t-coefficients must be polynomials in u");
        trim();
    }

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const Rat& r) { return BiPoly({UniPoly::constant(Var::u, r)}); }
    static BiPoly one() { return constant(Rat(1)); }
    /// c(u) * t^i
    static BiPoly term(const UniPoly& cu, int i) {
        if (cu.var() != Var::u) throw std::logic_error("BiPoly::term: coefficient must be in u");
        std::vector<UniPoly> v(static_cast<size_t>(i) + 1, UniPoly::zero(Var::u));
        v.back() = cu;
        return BiPoly(std::move(v));
    }
    /// c * t^i * u^k
    static BiPoly monomial(const Rat& c, int i, int k) {
        return term(UniPoly::monomial(Var::u, c, k), i);
    }

    bool is_zero() const { return c_.empty(); }
    int deg_t() const { return static_cast<int>(c_.size()) - 1; }
    int deg_u() const {
        int d = -1;
        for (const auto& e : c_) d = std::max(d, e.degree());
        return d;
    }

    /// Coefficient of t^i, a polynomial in u. Zero beyond the degree.
    UniPoly coeff_t(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return UniPoly::zero(Var::u);
        return c_[static_cast<size_t>(i)];
    }
    /// Coefficient of u^k, read off across all t-powers: a polynomial in t.
    UniPoly coeff_u(int k) const {
        std::vector<Rat> r(c_.size(), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].coeff(k);
        return UniPoly(Var::t, std::move(r));
    }
    /// Coefficient of t^i u^k.
    Rat coeff(int i, int k) const { return coeff_t(i).coeff(k); }

    bool all_integer() const {
        return std::all_of(c_.begin(), c_.end(), [](const UniPoly& e) { return e.all_integer(); });
    }

    BiPoly operator-() const {
        std::vector<UniPoly> r;
        r.reserve(c_.size());
        for (const auto& e : c_) r.push_back(-e);
        return BiPoly(std::move(r));
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        std::vector<UniPoly> r(std::max(a.c_.size(), b.c_.size()), UniPoly::zero(Var::u));
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = a.coeff_t(static_cast<int>(i)) + b.coeff_t(static_cast<int>(i));
        return BiPoly(std::move(r));
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<UniPoly> r(a.c_.size() + b.c_.size() - 1, UniPoly::zero(Var::u));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return BiPoly(std::move(r));
    }
    friend BiPoly operator*(const BiPoly& a, const UniPoly& s) { return a * BiPoly({s}); }
    friend BiPoly operator*(const BiPoly& a, const Rat& s) {
        std::vector<UniPoly> r;
        r.reserve(a.c_.size());
        for (const auto& e : a.c_) r.push_back(e * s);
        return BiPoly(std::move(r));
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// Divide every t-coefficient exactly by a polynomial in u; throws when
    /// any coefficient division leaves a remainder.
    BiPoly exact_div_u(const UniPoly& d) const {
        std::vector<UniPoly> r;
        r.reserve(c_.size());
        for (const auto& e : c_) r.push_back(e.exact_div(d));
        return BiPoly(std::move(r));
    }

    /// Division in (Q[u])[t]. Proceeds while each step's leading-coefficient
    /// division in Q[u] is exact; returns {quotient, remainder}. When b is a
    /// factor of *this the remainder comes back zero.
    std::pair<BiPoly, BiPoly> divmod_t(const BiPoly& b) const {
        if (b.is_zero()) throw std::domain_error("BiPoly: division by zero polynomial");
        BiPoly q = zero();
        BiPoly r = *this;
        const UniPoly blead = b.coeff_t(b.deg_t());
        while (!r.is_zero() && r.deg_t() >= b.deg_t()) {
            auto [qc, rem] = r.coeff_t(r.deg_t()).divmod(blead);
            if (!rem.is_zero()) return {q, r}; // cannot continue exactly
            const BiPoly step = term(qc, r.deg_t() - b.deg_t());
            q = q + step;
            r = r - step * b;
        }
        return {q, r};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<UniPoly> c_;
};

/// t^d * p(1/t, u): the reversal that turns the zeta numerator into a
/// polynomial monic in t. Requires d >= deg_t(p).
inline BiPoly reverse_t(const BiPoly& p, int d) {
    if (d < 0 || d < p.deg_t()) throw std::domain_error("reverse_t: d < deg_t(p)");
    std::vector<UniPoly> r(static_cast<size_t>(d) + 1, UniPoly::zero(Var::u));
    for (int i = 0; i <= p.deg_t(); ++i) r[static_cast<size_t>(d - i)] = p.coeff_t(i);
    return BiPoly(std::move(r));
}

/// Exact substitution u = u0, collapsing to a polynomial in t.
inline UniPoly specialize_u(const BiPoly& p, const Rat& u0) {
    std::vector<Rat> r(static_cast<size_t>(p.deg_t() + 1), Rat(0));
    for (int i = 0; i <= p.deg_t(); ++i) r[static_cast<size_t>(i)] = p.coeff_t(i).eval(u0);
    return UniPoly(Var::t, std::move(r));
}

/// Exact substitution t = t0, collapsing to a polynomial in u.
inline UniPoly specialize_t(const BiPoly& p, const Rat& t0) {
    UniPoly acc = UniPoly::zero(Var::u);
    Rat tp(1);
    for (int i = 0; i <= p.deg_t(); ++i) {
        acc = acc + p.coeff_t(i) * tp;
        tp *= t0;
    }
    return acc;
}

inline Rat eval_point(const BiPoly& p, const Rat& t0, const Rat& u0) {
    return specialize_u(p, u0).eval(t0);
}

} // namespace bizeta
