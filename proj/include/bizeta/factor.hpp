#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bizeta/bipoly.hpp"

namespace bizeta {

namespace detail {

/// All positive divisors of |n|, n != 0.
inline std::vector<Int> divisors(const Int& n) {
    std::vector<Int> low, high;
    const Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            low.push_back(d);
            if (d * d != a) high.push_back(a / d);
        }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

/// Monic integer polynomial factorization, degree <= 4. Rational roots of a
/// monic integer polynomial are integers dividing the constant term; what is
/// left after stripping roots is degree <= 4 with no linear factor, so only
/// the quadratic-pair split of a quartic remains to be searched. Factors are
/// returned monic over Z, in no particular order, product = input.
inline std::vector<UniPoly> factor_monic_integer(const UniPoly& f) {
    if (f.degree() > 4) throw std::domain_error("factor: degree > 4 unsupported");
    std::vector<UniPoly> factors;
    UniPoly rest = f;
    const UniPoly t_mono = UniPoly::monomial(Var::t, Rat(1), 1);

    while (rest.degree() >= 1 && rest.coeff(0).is_zero()) {
        factors.push_back(t_mono);
        rest = rest.exact_div(t_mono);
    }
    bool found = true;
    while (found && rest.degree() >= 1) {
        found = false;
        for (const Int& d : divisors(rest.coeff(0).to_int())) {
            for (int sign : {1, -1}) {
                const Rat root(sign * d);
                if (rest.eval(root).is_zero()) {
                    const UniPoly lin(Var::t, {-root, Rat(1)});
                    factors.push_back(lin);
                    rest = rest.exact_div(lin);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (rest.degree() == 0) break;
    }

    if (rest.degree() == 4) {
        // (t^2 + A t + B)(t^2 + C t + D) with integer A,B,C,D (Gauss):
        // enumerate B*D = e0, then A+C = e3 and AC = e2 - B - D force A,C.
        const Int e3 = rest.coeff(3).to_int(), e2 = rest.coeff(2).to_int(),
                  e1 = rest.coeff(1).to_int(), e0 = rest.coeff(0).to_int();
        bool split = false;
        for (const Int& d : divisors(e0)) {
            for (int sign : {1, -1}) {
                const Int B = sign * d;
                const Int D = e0 / B;
                const Int sum = e3, prod = e2 - B - D;
                Int disc_root;
                if (!is_square(sum * sum - 4 * prod, disc_root)) continue;
                for (int s2 : {1, -1}) {
                    if ((sum + s2 * disc_root) % 2 != 0) continue;
                    const Int A = (sum + s2 * disc_root) / 2;
                    const Int C = sum - A;
                    if (A * D + B * C != e1) continue;
                    factors.emplace_back(Var::t, std::vector<Rat>{Rat(B), Rat(A), Rat(1)});
                    factors.emplace_back(Var::t, std::vector<Rat>{Rat(D), Rat(C), Rat(1)});
                    split = true;
                    break;
                }
                if (split) break;
            }
            if (split) break;
        }
        if (!split) factors.push_back(rest);
    } else if (rest.degree() >= 1) {
        // degree 2 or 3 with no rational root: irreducible over Q
        factors.push_back(rest);
    }
    return factors;
}

/// Factor a monic polynomial over Q into monic irreducibles: scale t by the
/// lcm of the coefficient denominators to reach a monic integer polynomial,
/// factor that, and scale back.
inline std::vector<UniPoly> factor_monic_rational(const UniPoly& f) {
    if (!f.is_monic()) throw std::domain_error("factor: input must be monic");
    Int lambda = 1;
    for (const Rat& c : f.coeffs()) lambda = lcm(lambda, c.den());
    const int d = f.degree();
    std::vector<Rat> scaled(static_cast<size_t>(d) + 1, Rat(0));
    for (int i = 0; i <= d; ++i)
        scaled[static_cast<size_t>(i)] = f.coeff(i) * pow(Rat(lambda), static_cast<unsigned long>(d - i));
    auto int_factors = factor_monic_integer(UniPoly(Var::t, std::move(scaled)));
    if (lambda == 1) return int_factors;
    std::vector<UniPoly> out;
    const Rat inv_lambda(Int(1), lambda);
    for (const auto& g : int_factors) {
        std::vector<Rat> back(static_cast<size_t>(g.degree()) + 1, Rat(0));
        for (int i = 0; i <= g.degree(); ++i)
            back[static_cast<size_t>(i)] = g.coeff(i) * pow(inv_lambda, static_cast<unsigned long>(g.degree() - i));
        out.emplace_back(Var::t, std::move(back));
    }
    return out;
}

/// Is f (univariate in t over Q, any nonzero leading coefficient)
/// irreducible over Q? Degree <= 0 counts as not irreducible (units).
inline bool unipoly_irreducible_q(const UniPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const UniPoly monic = f * (Rat(1) / f.leading());
    return factor_monic_rational(monic).size() == 1;
}

/// Lagrange interpolation over Q: the unique polynomial in u of degree
/// < points.size() through (x_j, y_j).
inline UniPoly interpolate_u(const std::vector<std::pair<Rat, Rat>>& points) {
    UniPoly acc = UniPoly::zero(Var::u);
    for (size_t j = 0; j < points.size(); ++j) {
        UniPoly basis = UniPoly::one(Var::u);
        Rat denom(1);
        for (size_t l = 0; l < points.size(); ++l) {
            if (l == j) continue;
            basis = basis * UniPoly(Var::u, {-points[l].first, Rat(1)});
            denom *= points[j].first - points[l].first;
        }
        acc = acc + basis * (points[j].second / denom);
    }
    return acc;
}

/// Multiset product of a subset selection: multiply the chosen univariate
/// factors together (indices into `factors`).
inline UniPoly subset_product(const std::vector<UniPoly>& factors, unsigned mask) {
    UniPoly prod = UniPoly::one(Var::t);
    for (size_t i = 0; i < factors.size(); ++i)
        if (mask & (1u << i)) prod = prod * factors[i];
    return prod;
}

} // namespace detail

/// Result of the brute-force factorization oracle. `input` is the monic
/// polynomial the search actually ran on; when the caller's polynomial had
/// constant term 1 instead, it was reversed first and `reversed_input` is
/// set. The product of `factors` (with multiplicity) equals `input`
/// bit-for-bit; a single factor of multiplicity 1 means irreducible
/// over Q(u).
struct Factorization {
    BiPoly input;
    bool reversed_input = false;
    std::vector<std::pair<BiPoly, int>> factors;

    bool is_irreducible() const {
        return factors.size() == 1 && factors.front().second == 1;
    }
    int factor_count() const {
        int n = 0;
        for (const auto& [f, m] : factors) n += m;
        return n;
    }
};

namespace detail {

/// Split off one monic factor of p (monic in t, deg_t >= 2) by
/// evaluation-interpolation, or conclude p is irreducible over Q(u).
/// Returns the pair (f, g) with p = f g when reducible.
inline bool split_monic_bipoly(const BiPoly& p, BiPoly& f_out, BiPoly& g_out) {
    const int d = p.deg_t();
    if (d > 4) throw std::domain_error("factor_oracle: deg_t > 4 unsupported");
    if (d <= 1) return false;
    const int du = std::max(p.deg_u(), 0);
    const int interp_points = du + 1;
    const int total_points = interp_points + 2; // margin for cross-checking

    // Specialization points u = 2, 3, ... skipping any value where the
    // leading t-coefficient would vanish (cannot happen for monic input,
    // kept as a guard for general callers).
    std::vector<Rat> us;
    std::vector<std::vector<UniPoly>> factored; // irreducible factors of p(t, u_j)
    const UniPoly lead = p.coeff_t(d);
    for (long u0 = 2; static_cast<int>(us.size()) < total_points; ++u0) {
        if (lead.eval(Rat(u0)).is_zero()) continue;
        UniPoly spec = specialize_u(p, Rat(u0));
        spec = spec * (Rat(1) / spec.leading());
        auto factors = factor_monic_rational(spec);
        if (factors.size() == 1) return false; // an irreducible specialization settles it
        us.push_back(Rat(u0));
        factored.push_back(std::move(factors));
    }

    for (int d1 = 1; 2 * d1 <= d; ++d1) {
        // per-point candidates: all distinct monic degree-d1 sub-products
        std::vector<std::vector<UniPoly>> choices(static_cast<size_t>(interp_points));
        for (int j = 0; j < interp_points; ++j) {
            const auto& fs = factored[static_cast<size_t>(j)];
            for (unsigned mask = 1; mask < (1u << fs.size()); ++mask) {
                UniPoly prod = subset_product(fs, mask);
                if (prod.degree() != d1) continue;
                auto& bucket = choices[static_cast<size_t>(j)];
                if (std::find(bucket.begin(), bucket.end(), prod) == bucket.end())
                    bucket.push_back(std::move(prod));
            }
            if (choices[static_cast<size_t>(j)].empty()) break;
        }
        if (std::any_of(choices.begin(), choices.end(),
                        [](const auto& c) { return c.empty(); }))
            continue;

        // walk the cartesian product of per-point choices
        std::vector<size_t> idx(static_cast<size_t>(interp_points), 0);
        while (true) {
            // interpolate each t-coefficient of the candidate factor
            std::vector<UniPoly> cand_coeffs;
            cand_coeffs.reserve(static_cast<size_t>(d1) + 1);
            for (int i = 0; i < d1; ++i) {
                std::vector<std::pair<Rat, Rat>> pts;
                for (int j = 0; j < interp_points; ++j)
                    pts.emplace_back(us[static_cast<size_t>(j)],
                                     choices[static_cast<size_t>(j)][idx[static_cast<size_t>(j)]].coeff(i));
                cand_coeffs.push_back(interpolate_u(pts));
            }
            cand_coeffs.push_back(UniPoly::one(Var::u));
            BiPoly f(std::move(cand_coeffs));

            // cheap prune on the margin points before the exact product check
            bool consistent = true;
            for (int j = interp_points; j < total_points && consistent; ++j) {
                const UniPoly fj = specialize_u(f, us[static_cast<size_t>(j)]);
                UniPoly rem = specialize_u(p, us[static_cast<size_t>(j)]).divmod(fj).second;
                consistent = rem.is_zero();
            }
            if (consistent) {
                auto [g, rem] = p.divmod_t(f);
                if (rem.is_zero() && f * g == p) {
                    f_out = f;
                    g_out = g;
                    return true;
                }
            }

            int pos = interp_points - 1;
            while (pos >= 0) {
                if (++idx[static_cast<size_t>(pos)] < choices[static_cast<size_t>(pos)].size()) break;
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return false;
}

inline void factor_monic_bipoly(const BiPoly& p, std::vector<BiPoly>& out) {
    if (p.deg_t() < 1) return;
    BiPoly f = BiPoly::zero(), g = BiPoly::zero();
    if (!split_monic_bipoly(p, f, g)) {
        out.push_back(p);
        return;
    }
    factor_monic_bipoly(f, out);
    factor_monic_bipoly(g, out);
}

} // namespace detail

/// Independent desk-scale factorization of p over Q(u): accepts a polynomial
/// monic in t, or one with p(0,u) = 1 (which is reversed into monic form
/// first). Specializes u at small integers, factors each specialization
/// exactly over Q[t], matches factor-degree patterns across the points,
/// interpolates candidate coefficient polynomials in u and verifies by exact
/// multiplication. deg_t <= 4 only.
inline Factorization factor_oracle(const BiPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor_oracle: zero polynomial");
    if (p.deg_t() > 4) throw std::domain_error("factor_oracle: deg_t > 4 unsupported");

    Factorization result;
    if (p.coeff_t(p.deg_t()) == UniPoly::one(Var::u)) {
        result.input = p;
        result.reversed_input = false;
    } else if (p.coeff_t(0) == UniPoly::one(Var::u)) {
        result.input = reverse_t(p, p.deg_t());
        result.reversed_input = true;
    } else {
        throw std::domain_error("factor_oracle: input must be monic in t or have constant term 1");
    }

    std::vector<BiPoly> flat;
    detail::factor_monic_bipoly(result.input, flat);
    if (flat.empty()) flat.push_back(result.input); // constant input

    // aggregate multiplicities
    for (const auto& f : flat) {
        bool merged = false;
        for (auto& [g, m] : result.factors)
            if (g == f) {
                ++m;
                merged = true;
                break;
            }
        if (!merged) result.factors.emplace_back(f, 1);
    }

    // soundness: the product must reproduce the factored input bit-for-bit
    BiPoly prod = BiPoly::one();
    for (const auto& [f, m] : result.factors)
        for (int i = 0; i < m; ++i) prod = prod * f;
    if (prod != result.input)
        throw std::logic_error("factor_oracle: internal error, factor product mismatch");
    return result;
}

} // namespace bizeta
