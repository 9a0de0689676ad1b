#include <catch2/catch_amalgamated.hpp>

#include "bizeta/btable.hpp"

using namespace bizeta;

TEST_CASE("genus-0 table") {
    const BTable bt = btable_g0(4);
    CHECK(bt.g == 0);
    CHECK(bt.h == 1);
    CHECK(bt.finite_max_n() == 0);
    CHECK(bt.tail_start() == 1);
    CHECK(bt.b(0, 1) == 1);
    CHECK(bt.b(0, 2) == 0);
    // tail: h^0 = n + 1 on the unique class of each degree
    CHECK(bt.b(3, 4) == 1);
    CHECK(bt.b(3, 3) == 0);
}

TEST_CASE("genus-1 table") {
    const BTable bt = btable_g1(2, 3);
    CHECK(bt.h == 3);
    CHECK(bt.finite_max_n() == 0);
    CHECK(bt.tail_start() == 1);
    CHECK(bt.b(0, 1) == 1);
    // tail from degree 1: b_{n,n} = h
    CHECK(bt.b(1, 1) == 3);
    CHECK(bt.b(1, 2) == 0);
    CHECK(bt.b(5, 5) == 3);
    CHECK(bt.b(-1, 1) == 0);
    CHECK(bt.b(1, -1) == 0);
}

TEST_CASE("genus-2 table from (q, a, b)") {
    // q = 2, a = 0, b = 0: h = 5, b_{1,1} = 3, A_2 = 7, b_{2,1} = 4
    const BTable bt = btable_g2(2, 0, 0);
    CHECK(bt.h == 5);
    CHECK(bt.finite_max_n() == 2);
    CHECK(bt.tail_start() == 3);
    CHECK(bt.b(0, 1) == 1);
    CHECK(bt.b(1, 1) == 3);
    CHECK(bt.b(1, 2) == 0); // Clifford: no degree-1 class with h^0 = 2
    CHECK(bt.b(2, 1) == 4);
    CHECK(bt.b(2, 2) == 1); // the canonical class
    CHECK(bt.b(2, 3) == 0);
    // tail from degree 3: b_{n, n-1} = h
    CHECK(bt.b(3, 2) == 5);
    CHECK(bt.b(3, 1) == 0);
    CHECK(bt.b(4, 3) == 5);
}

TEST_CASE("unrealizable parameters need the synthetic flag") {
    CHECK_THROWS_AS(btable_g1(2, 0), std::domain_error);
    const BTable s = btable_g1(2, 0, true);
    CHECK(s.h == 0);
    CHECK(s.synthetic);
    CHECK(s.b(1, 1) == 0);

    // (q, a, b) = (2, -3, 1): h = 1 - 9 + 4 + 1 = -3, A_2 = -1, b_{2,1} = -4
    CHECK_THROWS_AS(btable_g2(2, -3, 1), std::domain_error);
    const BTable s2 = btable_g2(2, -3, 1, true);
    CHECK(s2.h == -3);
    CHECK(s2.b(1, 1) == 0);
    CHECK(s2.b(2, 1) == -4);

    // h = 0 boundary: b + a(q+1) + q^2 + 1 = 0
    CHECK_THROWS_AS(btable_g2(2, 0, -5), std::domain_error);
    const BTable s3 = btable_g2(2, 0, -5, true);
    CHECK(s3.h == 0);
}

TEST_CASE("validate_btable rejects malformed tables") {
    BTable bt = btable_g2(2, 0, 0);

    BTable wrong_rows = bt;
    wrong_rows.finite.pop_back();
    CHECK_THROWS_AS(validate_btable(wrong_rows), std::domain_error);

    BTable no_trivial = bt;
    no_trivial.finite[0] = {Int(0), Int(0)};
    CHECK_THROWS_AS(validate_btable(no_trivial), std::domain_error);

    BTable extra_zero = bt;
    extra_zero.finite[0] = {Int(0), Int(1), Int(2)};
    CHECK_THROWS_AS(validate_btable(extra_zero), std::domain_error);

    BTable negative = bt;
    negative.finite[1][1] = -1;
    CHECK_THROWS_AS(validate_btable(negative), std::domain_error);
    negative.synthetic = true; // synthetic tables bypass realizability
    CHECK_NOTHROW(validate_btable(negative));

    BTable oversum = bt;
    oversum.finite[2][1] = 99; // row sum exceeds h = 5
    CHECK_THROWS_AS(validate_btable(oversum), std::domain_error);

    BTable bad_genus = bt;
    bad_genus.g = 3;
    CHECK_THROWS_AS(validate_btable(bad_genus), std::domain_error);

    BTable bad_h = bt;
    bad_h.h = 0;
    CHECK_THROWS_AS(validate_btable(bad_h), std::domain_error);
}
