#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bizeta/bipoly.hpp"
#include "bizeta/rational.hpp"
#include "bizeta/unipoly.hpp"

using namespace bizeta;

namespace {

UniPoly up(std::initializer_list<int> cs) {
    std::vector<Rat> v;
    for (int c : cs) v.emplace_back(c);
    return UniPoly(Var::t, std::move(v));
}

UniPoly upu(std::initializer_list<int> cs) {
    std::vector<Rat> v;
    for (int c : cs) v.emplace_back(c);
    return UniPoly(Var::u, std::move(v));
}

UniPoly random_unipoly(std::mt19937& rng, Var var, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-6, 6), den(1, 4);
    std::vector<Rat> cs;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(Int(num(rng)), Int(den(rng)));
    return UniPoly(var, std::move(cs));
}

BiPoly random_bipoly(std::mt19937& rng, int max_dt, int max_du) {
    std::uniform_int_distribution<int> deg(0, max_dt);
    std::vector<UniPoly> rows;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) rows.push_back(random_unipoly(rng, Var::u, max_du));
    return BiPoly(std::move(rows));
}

} // namespace

TEST_CASE("Rat canonicalizes on construction") {
    CHECK(Rat(Int(2), Int(6)) == Rat(Int(1), Int(3)));
    CHECK(Rat(Int(2), Int(-4)) == Rat(Int(-1), Int(2)));
    CHECK(Rat(Int(2), Int(-4)).den() == 2); // denominator kept positive
    CHECK(Rat(Int(0), Int(7)) == Rat(0));
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("Rat arithmetic and queries") {
    const Rat half(Int(1), Int(2)), third(Int(1), Int(3));
    CHECK(half + third == Rat(Int(5), Int(6)));
    CHECK(half - third == Rat(Int(1), Int(6)));
    CHECK(half * third == Rat(Int(1), Int(6)));
    CHECK(half / third == Rat(Int(3), Int(2)));
    CHECK_THROWS_AS(half / Rat(0), std::domain_error);
    CHECK(-half == Rat(Int(-1), Int(2)));
    CHECK(half < Rat(1));
    CHECK(Rat(5).is_integer());
    CHECK(Rat(5).to_int() == 5);
    CHECK_THROWS_AS(half.to_int(), std::domain_error);
    CHECK(half.str() == "1/2");
    CHECK(Rat(-7).str() == "-7");
    CHECK(pow(Rat(Int(2), Int(3)), 3) == Rat(Int(8), Int(27)));
    CHECK(pow(Int(3), 4) == 81);
}

TEST_CASE("integer square detection") {
    Int root;
    CHECK(is_square(Int(49), root));
    CHECK(root == 7);
    CHECK(is_square(Int(0), root));
    CHECK(root == 0);
    CHECK_FALSE(is_square(Int(50), root));
    CHECK_FALSE(is_square(Int(-4), root));
}

TEST_CASE("UniPoly canonical form and coefficient access") {
    const UniPoly p(Var::t, {Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(5) == Rat(0));
    CHECK(p.coeff(-1) == Rat(0));
    CHECK(UniPoly::zero(Var::t).degree() == -1);
    CHECK(UniPoly::zero(Var::t).is_zero());
    CHECK(UniPoly::monomial(Var::t, Rat(3), 2) == up({0, 0, 3}));
    CHECK(up({1, 2}).leading() == Rat(2));
    CHECK(up({1, 2}).is_monic() == false);
    CHECK(up({5, 1}).is_monic());
}

TEST_CASE("UniPoly ring operations, frozen examples") {
    CHECK(up({1, 1}) * up({1, -1}) == up({1, 0, -1}));         // (1+t)(1-t) = 1-t^2
    CHECK(up({1, 1}) + up({-1, 0, 3}) == up({0, 1, 3}));
    CHECK(up({2, 1}) - up({2, 1}) == UniPoly::zero(Var::t));
    CHECK(up({1, 2, 1}).eval(Rat(2)) == Rat(9));
    CHECK(up({1, 2, 1}) * Rat(Int(1), Int(2)) == UniPoly(Var::t, {Rat(Int(1), Int(2)), Rat(1), Rat(Int(1), Int(2))}));
}

TEST_CASE("UniPoly division") {
    const auto [q, r] = up({-1, 0, 0, 1}).divmod(up({-1, 1})); // t^3-1 = (t-1)(t^2+t+1)
    CHECK(q == up({1, 1, 1}));
    CHECK(r.is_zero());

    const auto [q2, r2] = up({1, 0, 1}).divmod(up({1, 1})); // t^2+1 = (t+1)(t-1) + 2
    CHECK(q2 == up({-1, 1}));
    CHECK(r2 == up({2}));

    CHECK(up({-1, 0, 0, 1}).exact_div(up({-1, 1})) == up({1, 1, 1}));
    CHECK_THROWS_AS(up({1, 0, 1}).exact_div(up({1, 1})), std::domain_error);
    CHECK_THROWS_AS(up({1}).divmod(UniPoly::zero(Var::t)), std::domain_error);
}

TEST_CASE("UniPoly rejects mixed-variable arithmetic") {
    CHECK_THROWS_AS(up({1, 1}) + upu({1, 1}), std::logic_error);
    CHECK_THROWS_AS(up({1, 1}) * upu({1, 1}), std::logic_error);
}

TEST_CASE("Gaussian bracket") {
    CHECK(gauss_poly(0).is_zero());
    CHECK(gauss_poly(1) == upu({1}));
    CHECK(gauss_poly(3) == upu({1, 1, 1}));
    CHECK_THROWS_AS(gauss_poly(-1), std::domain_error);
    // (u-1) [k]_u = u^k - 1
    for (int k = 0; k <= 6; ++k)
        CHECK(upu({-1, 1}) * gauss_poly(k) ==
              UniPoly::monomial(Var::u, Rat(1), k) - UniPoly::one(Var::u));
}

TEST_CASE("UniPoly ring axioms on random inputs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const UniPoly a = random_unipoly(rng, Var::t, 5);
        const UniPoly b = random_unipoly(rng, Var::t, 5);
        const UniPoly c = random_unipoly(rng, Var::t, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            const auto [q, r] = a.divmod(b);
            CHECK(a == q * b + r);
            CHECK(r.degree() < b.degree());
        }
        // evaluation is a ring homomorphism
        const Rat x(Int(trial % 7 - 3), Int(2));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("BiPoly construction and degrees") {
    const BiPoly p({upu({1}), upu({2, -1}), upu({0, 1})}); // 1 + (2-u)t + ut^2
    CHECK(p.deg_t() == 2);
    CHECK(p.deg_u() == 1);
    CHECK(p.coeff(1, 1) == Rat(-1));
    CHECK(p.coeff(9, 9) == Rat(0));
    CHECK(p.coeff_t(1) == upu({2, -1}));
    CHECK(p.coeff_u(0) == up({1, 2, 0}));
    CHECK(p.coeff_u(1) == up({0, -1, 1}));
    CHECK(BiPoly::zero().deg_t() == -1);
    CHECK(BiPoly::zero().deg_u() == -1);
    CHECK(BiPoly({upu({1}), UniPoly::zero(Var::u)}).deg_t() == 0); // trailing zero row trimmed
    CHECK(BiPoly::monomial(Rat(3), 2, 1) == BiPoly({upu({0}), upu({0}), upu({0, 3})}));
    CHECK_THROWS_AS(BiPoly({up({1})}), std::logic_error); // t-polynomial as coefficient
}

TEST_CASE("BiPoly arithmetic, frozen example") {
    // (1 - t)(1 - ut) = 1 - (1+u) t + u t^2
    const BiPoly one_minus_t({upu({1}), upu({-1})});
    const BiPoly one_minus_ut({upu({1}), upu({0, -1})});
    const BiPoly prod = one_minus_t * one_minus_ut;
    CHECK(prod == BiPoly({upu({1}), upu({-1, -1}), upu({0, 1})}));
    CHECK(prod - prod == BiPoly::zero());
    CHECK(prod * Rat(2) == prod + prod);
}

TEST_CASE("reverse_t") {
    const BiPoly p({upu({1}), upu({2, -1}), upu({0, 1})});
    const BiPoly rev = reverse_t(p, 2);
    CHECK(rev == BiPoly({upu({0, 1}), upu({2, -1}), upu({1})}));
    CHECK(reverse_t(rev, 2) == p);
    CHECK(reverse_t(p, 3).deg_t() == 3); // padded reversal: t^3 p(1/t,u)
    CHECK_THROWS_AS(reverse_t(p, 1), std::domain_error);
}

TEST_CASE("specialization collapses one variable") {
    const BiPoly p({upu({1}), upu({2, -1}), upu({0, 1})}); // 1 + (2-u)t + ut^2
    CHECK(specialize_u(p, Rat(2)) == up({1, 0, 2}));       // u=2: 1 + 0t + 2t^2
    CHECK(specialize_t(p, Rat(1)) == upu({3}));            // P(1,u) = 3
    CHECK(eval_point(p, Rat(1), Rat(5)) == Rat(3));
    CHECK(eval_point(p, Rat(2), Rat(3)) == Rat(1 + (2 - 3) * 2 + 3 * 4));
}

TEST_CASE("specialization is a ring homomorphism on random inputs") {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 100; ++trial) {
        const BiPoly a = random_bipoly(rng, 3, 2);
        const BiPoly b = random_bipoly(rng, 3, 2);
        const Rat u0(Int(trial % 9 - 4), Int(3));
        CHECK(specialize_u(a * b, u0) == specialize_u(a, u0) * specialize_u(b, u0));
        CHECK(specialize_u(a + b, u0) == specialize_u(a, u0) + specialize_u(b, u0));
        CHECK(specialize_t(a * b, u0) == specialize_t(a, u0) * specialize_t(b, u0));
        // coefficient views agree
        for (int i = 0; i <= a.deg_t(); ++i)
            for (int k = 0; k <= a.deg_u(); ++k) {
                CHECK(a.coeff(i, k) == a.coeff_t(i).coeff(k));
                CHECK(a.coeff(i, k) == a.coeff_u(k).coeff(i));
            }
    }
}

TEST_CASE("BiPoly division in (Q[u])[t]") {
    const BiPoly p({upu({1}), upu({2, -1}), upu({0, 1})});
    const BiPoly d({upu({1}), upu({0, 1})}); // 1 + ut
    const auto [q, r] = (p * d).divmod_t(d);
    CHECK(r.is_zero());
    CHECK(q == p);

    // division stops when a coefficient division is inexact
    const BiPoly num({upu({0}), upu({1})});   // t
    const BiPoly den({upu({0, 1}), upu({1})}); // u + t
    const auto [q2, r2] = num.divmod_t(den);
    CHECK(q2 == BiPoly::one());
    CHECK(r2 == BiPoly({upu({0, -1})})); // t = 1*(u+t) - u

    CHECK_THROWS_AS(p.divmod_t(BiPoly::zero()), std::domain_error);
}

TEST_CASE("exact_div_u divides every t-coefficient") {
    const BiPoly p({upu({-1, 1}), upu({-2, 2})}); // (u-1) + 2(u-1)t
    CHECK(p.exact_div_u(upu({-1, 1})) == BiPoly({upu({1}), upu({2})}));
    CHECK_THROWS_AS(p.exact_div_u(upu({0, 1})), std::domain_error);
}

TEST_CASE("random multiply-divide round trips") {
    std::mt19937 rng(1234321);
    for (int trial = 0; trial < 100; ++trial) {
        BiPoly a = random_bipoly(rng, 2, 2);
        BiPoly b = random_bipoly(rng, 2, 2);
        if (b.is_zero()) continue;
        // force b monic in t so division always completes
        std::vector<UniPoly> rows;
        for (int i = 0; i < b.deg_t(); ++i) rows.push_back(b.coeff_t(i));
        rows.push_back(UniPoly::one(Var::u));
        b = BiPoly(std::move(rows));
        const auto [q, r] = (a * b).divmod_t(b);
        CHECK(r.is_zero());
        CHECK(q == a);
    }
}
