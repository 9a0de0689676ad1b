#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bizeta/rational.hpp"

namespace bizeta {

/// Which formal variable a univariate polynomial lives in. The library keeps
/// polynomials in t (zeta numerators, L-polynomials) and polynomials in u
/// (the coefficients P_i(u)) apart at runtime; mixing them is a logic error.
enum class Var : unsigned char { t, u };

inline const char* var_name(Var v) { return v == Var::t ? "t" : "u"; }

/// Dense univariate polynomial over Q in canonical form: no trailing zero
/// coefficients, the zero polynomial has an empty coefficient list and
/// degree -1.
class UniPoly {
public:
    explicit UniPoly(Var v) : var_(v) {}
    UniPoly(Var v, std::vector<Rat> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

    static UniPoly zero(Var v) { return UniPoly(v); }
    static UniPoly constant(Var v, const Rat& r) { return UniPoly(v, {r}); }
    static UniPoly one(Var v) { return constant(v, Rat(1)); }
    /// c * x^k
    static UniPoly monomial(Var v, const Rat& c, int k) {
        std::vector<Rat> cs(static_cast<size_t>(k) + 1, Rat(0));
        cs.back() = c;
        return UniPoly(v, std::move(cs));
    }

    Var var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }

    Rat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(k)];
    }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool all_integer() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_integer(); });
    }

    UniPoly operator-() const {
        std::vector<Rat> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UniPoly(var_, std::move(r));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        a.require_same_var(b);
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return UniPoly(a.var_, std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        a.require_same_var(b);
        if (a.is_zero() || b.is_zero()) return zero(a.var_);
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(a.var_, std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const Rat& s) {
        std::vector<Rat> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return UniPoly(a.var_, std::move(r));
    }
    friend UniPoly operator*(const Rat& s, const UniPoly& a) { return a * s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Polynomial division over Q; the divisor may be any nonzero polynomial.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        require_same_var(d);
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly q = zero(var_);
        UniPoly r = *this;
        const Rat lead = d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const Rat c = r.leading() / lead;
            const int k = r.degree() - d.degree();
            const UniPoly term = monomial(var_, c, k);
            q = q + term;
            r = r - term * d;
        }
        return {q, r};
    }

    /// Exact division; throws if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero())
            throw std::domain_error("UniPoly: division is not exact");
        return q;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void require_same_var(const UniPoly& o) const {
        if (var_ != o.var_)
            throw std::logic_error("UniPoly: mixed-variable arithmetic");
    }

    Var var_;
    std::vector<Rat> c_;
};

/// The Gaussian bracket [k]_u = (u^k - 1)/(u - 1) = 1 + u + ... + u^{k-1};
/// [0]_u = 0. This is the u-deformation of the integer k that weights each
/// divisor-class count in the two-variable zeta function.
inline UniPoly gauss_poly(int k) {
    if (k < 0) throw std::domain_error("gauss_poly: negative k");
    return UniPoly(Var::u, std::vector<Rat>(static_cast<size_t>(k), Rat(1)));
}

} // namespace bizeta
