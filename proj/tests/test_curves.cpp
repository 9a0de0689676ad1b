#include <catch2/catch_amalgamated.hpp>

#include "bizeta/curve.hpp"

using namespace bizeta;

namespace {

CurveModel elliptic(long p, int m, long a1, long a3, long a2, long a4, long a6) {
    CurveModel c;
    c.kind = CurveKind::elliptic;
    c.field = FieldSpec{p, m, {}};
    c.a1 = a1; c.a3 = a3; c.a2 = a2; c.a4 = a4; c.a6 = a6;
    return c;
}

CurveModel quintic(long p, int m, std::vector<long> f) {
    CurveModel c;
    c.kind = CurveKind::hyperelliptic_g2;
    c.field = FieldSpec{p, m, {}};
    c.f = std::move(f);
    return c;
}

} // namespace

TEST_CASE("point counts of reference elliptic curves") {
    // y^2 + y = x^3 over F_2: supersingular, N = 3
    CHECK(count_points(elliptic(2, 1, 0, 1, 0, 0, 0)) == 3);
    // y^2 + y = x^3 + x + 1 over F_2: N = 1 (no affine points)
    CHECK(count_points(elliptic(2, 1, 0, 1, 0, 1, 1)) == 1);
    // y^2 = x^3 + x over F_5: N = 4
    CHECK(count_points(elliptic(5, 1, 0, 0, 0, 1, 0)) == 4);
    // y^2 = x^3 + 2 over F_7: x^3 hits each cube 3 times, N = 9
    CHECK(count_points(elliptic(7, 1, 0, 0, 0, 0, 2)) == 9);
}

TEST_CASE("extension counts agree with a native model") {
    // y^2 + y = x^3 counted over F_4 two ways: extension of the F_2 model,
    // and the same equation written directly over F_4.
    const CurveModel over_f2 = elliptic(2, 1, 0, 1, 0, 0, 0);
    CHECK(count_points(over_f2, 2) == 9);
    const CurveModel over_f4 = elliptic(2, 2, 0, 1, 0, 0, 0);
    CHECK(count_points(over_f4, 1) == 9);
    CHECK(count_points(over_f2, 4) == count_points(over_f4, 2));
}

TEST_CASE("genus-2 counts match the L-polynomial's Newton predictions") {
    // y^2 = x^5 + 1 over F_3 has L = 1 + 9t^4, so the higher counts are
    // pinned: N_3 = 27 + 1 - 0 = 28, N_4 = 81 + 1 + 36 = 118.
    const CurveModel c = quintic(3, 1, {1, 0, 0, 0, 0, 1});
    CHECK(count_points(c, 1) == 4);
    CHECK(count_points(c, 2) == 10);
    CHECK(count_points(c, 3) == 28);
    CHECK(count_points(c, 4) == 118);
}

TEST_CASE("point_counts assembles N_1..N_g and applies the sanity window") {
    const PointCounts pc = point_counts(quintic(3, 1, {1, 0, 0, 0, 0, 1}));
    CHECK(pc.q == 3);
    CHECK(pc.g == 2);
    CHECK(pc.n == std::vector<long>{4, 10});

    const PointCounts pe = point_counts(elliptic(2, 1, 0, 1, 0, 0, 0));
    CHECK(pe.n == std::vector<long>{3});
}

TEST_CASE("hasse window check") {
    CHECK_NOTHROW(check_hasse_window(PointCounts{2, 1, {5}}));  // (5-3)^2 = 4 <= 8
    CHECK_THROWS_AS(check_hasse_window(PointCounts{2, 1, {6}}), std::domain_error); // 9 > 8
    CHECK_THROWS_AS(check_hasse_window(PointCounts{2, 1, {-1}}), std::domain_error);
}

TEST_CASE("invalid models are rejected") {
    // y^2 = x^3 over F_3 is singular (discriminant 0)
    CHECK_THROWS_AS(count_points(elliptic(3, 1, 0, 0, 0, 0, 0)), std::domain_error);
    // genus 2 in characteristic 2
    CHECK_THROWS_AS(count_points(quintic(2, 1, {1, 0, 0, 0, 0, 1})), std::domain_error);
    // non-monic / wrong-degree f
    CHECK_THROWS_AS(count_points(quintic(3, 1, {1, 0, 0, 0, 0, 2})), std::domain_error);
    CHECK_THROWS_AS(count_points(quintic(3, 1, {1, 0, 0, 1})), std::domain_error);
    // f = x^5: repeated root at 0
    CHECK_THROWS_AS(count_points(quintic(3, 1, {0, 0, 0, 0, 0, 1})), std::domain_error);
    // extension degree out of range: total degree p^(m*ext) capped at 4
    CHECK_THROWS_AS(count_points(elliptic(2, 1, 0, 1, 0, 0, 0), 5), std::domain_error);
    CHECK_THROWS_AS(count_points(elliptic(3, 2, 0, 0, 0, 1, 1), 3), std::domain_error);
    CHECK_THROWS_AS(count_points(elliptic(2, 1, 0, 1, 0, 0, 0), 0), std::domain_error);
}

TEST_CASE("discriminant matches the short-form specialization") {
    // for y^2 = x^3 + Ax + B the discriminant is -16(4A^3 + 27B^2)
    const Field F = make_field(7, 1);
    for (long A = 0; A < 7; ++A)
        for (long B = 0; B < 7; ++B) {
            const long lhs = elliptic_discriminant(F, elliptic(7, 1, 0, 0, 0, A, B));
            const long rhs = F.from_int(-16 * (4 * A * A * A + 27 * B * B));
            CHECK(lhs == rhs);
        }
}
