#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "bizeta/alpha.hpp"

using namespace bizeta;

namespace {

UniPoly upu(std::initializer_list<int> cs) {
    std::vector<Rat> v;
    for (int c : cs) v.emplace_back(c);
    return UniPoly(Var::u, std::move(v));
}

} // namespace

TEST_CASE("alpha matrix of the genus-1 reference polynomial") {
    // P = 1 + (2-u)t + ut^2 for (q, N) = (2, 3)
    const AlphaMatrix A = alpha_matrix(p_explicit_g1(2, 3));
    CHECK(A.g == 1);
    CHECK(A.at(0, 0) == 1);
    CHECK(A.at(0, 1) == 0);
    CHECK(A.at(1, 0) == 2);
    CHECK(A.at(1, 1) == -1);
    CHECK(A.at(2, 0) == 0);
    CHECK(A.at(2, 1) == 1);
    CHECK(A.at(-1, 0) == 0); // out of range reads are 0
    CHECK(A.at(0, -1) == 0);
    CHECK(A.at(3, 0) == 0);
}

TEST_CASE("alpha matrix of the genus-2 reference polynomial") {
    // P = 1 + (2-u)t + (2-u)t^2 + (2u-u^2)t^3 + u^2 t^4 for (q,a,b) = (2,0,0)
    const AlphaMatrix A = alpha_matrix(p_explicit_g2(2, 0, 0));
    const std::vector<std::vector<Int>> expect = {
        {1, 0, 0}, {2, -1, 0}, {2, -1, 0}, {0, 2, -1}, {0, 0, 1}};
    CHECK(A.a == expect);
}

TEST_CASE("b recovered from alpha matches the table") {
    const AlphaMatrix A = alpha_matrix(p_explicit_g1(2, 3));
    CHECK(b_from_alpha(A, 0, 1) == 1);
    CHECK(b_from_alpha(A, 1, 1) == 3);
    CHECK(b_from_alpha(A, 1, 2) == 0);
    CHECK(b_from_alpha(A, 2, 2) == 3); // tail: b_{n,n+1-g} = h
    CHECK(b_from_alpha(A, 2, 1) == 0);
    CHECK(b_from_alpha(A, 5, 5) == 3);
    CHECK_THROWS_AS(b_from_alpha(A, -1, 1), std::domain_error);
    CHECK_THROWS_AS(b_from_alpha(A, 0, 0), std::domain_error);
}

TEST_CASE("special-value identities in the alpha matrix") {
    // b_{1,2} = alpha_00 + alpha_11 and b_{2,3} = alpha_00 + alpha_11 + alpha_22;
    // both vanish for a genus-2 curve table, forcing alpha_11 = -1, alpha_22 = 0.
    for (long a = -2; a <= 2; ++a)
        for (long b = 0; b <= 3; ++b) {
            const Int h = Int(b) + Int(a) * 3 + 5;
            if (h < 1 || 3 + a < 0) continue;
            const AlphaMatrix A = alpha_matrix(p_explicit_g2(2, a, b, true));
            CHECK(b_from_alpha(A, 1, 2) == A.at(0, 0) + A.at(1, 1));
            CHECK(b_from_alpha(A, 2, 3) == A.at(0, 0) + A.at(1, 1) + A.at(2, 2));
            CHECK(A.at(1, 1) == -1);
            CHECK(A.at(2, 2) == 0);
        }
}

TEST_CASE("cumulative identities hold across the battery") {
    struct Case { PPoly p; BTable bt; };
    const std::vector<Case> cases = {
        {p_explicit_g0(3), btable_g0(3)},
        {p_explicit_g1(2, 3), btable_g1(2, 3)},
        {p_explicit_g1(5, 9), btable_g1(5, 9)},
        {p_explicit_g2(2, 0, 0), btable_g2(2, 0, 0)},
        {p_explicit_g2(3, -2, 2), btable_g2(3, -2, 2)},
        {p_explicit_g1(2, 0, true), btable_g1(2, 0, true)},
        {p_explicit_g2(2, 0, -5, true), btable_g2(2, 0, -5, true)},
    };
    for (const auto& c : cases) {
        const CheckReport r = cumulative_identity_check(alpha_matrix(c.p), c.bt, 6, 6);
        INFO("g = " << c.p.g << ", q = " << c.p.q << ", h = " << c.p.h.get_str());
        for (const auto& id : r.failed_ids()) INFO("failed: " << id);
        CHECK(r.all_pass());
        CHECK(r.has("cum-part1-nu0-a0"));
        CHECK(r.has("cum-part1-nu6-a6"));
        CHECK(r.has("cum-part2-nu6-mu8"));
    }
}

TEST_CASE("cumulative check flags a mismatched pairing") {
    // pair the (2,0,0) polynomial with the (2,1,0) table: entries differ
    const CheckReport r =
        cumulative_identity_check(alpha_matrix(p_explicit_g2(2, 0, 0)), btable_g2(2, 1, 0), 4, 4);
    CHECK_FALSE(r.all_pass());
    const auto failed = r.failed_ids();
    CHECK(std::find(failed.begin(), failed.end(), "cum-part2-nu1-mu1") != failed.end());
}

TEST_CASE("alpha_matrix rejects degree-bound violations") {
    // hand-built P with an illegal u^2 in P_1 (still passes validate_ppoly)
    PPoly bad;
    bad.g = 2;
    bad.q = 2;
    bad.h = 3;
    bad.poly = BiPoly({upu({1}), upu({0, 0, 1}), upu({0}), upu({0}), upu({0, 0, 1})});
    CHECK_THROWS_AS(alpha_matrix(bad), std::domain_error);
}

TEST_CASE("alpha_matrix rejects non-integer or malformed P") {
    PPoly frac;
    frac.g = 1;
    frac.q = 2;
    frac.h = 3;
    frac.poly = BiPoly({upu({1}), UniPoly(Var::u, {Rat(Int(1), Int(2)), Rat(-1)}), upu({0, 1})});
    CHECK_THROWS_AS(alpha_matrix(frac), std::domain_error);
}
