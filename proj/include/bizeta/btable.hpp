#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bizeta/rational.hpp"

namespace bizeta {

/// The divisor-class census of a curve: b_{nk} = number of degree-n divisor
/// classes with h^0 = k. Only the finite range 0 <= n <= max(2g-2, 0) is
/// stored; from n0 = max(2g-1, 1) on, Riemann-Roch forces h^0 = n+1-g on
/// every class, so b_{n,n+1-g} = h and everything else vanishes (the tail).
///
/// Tables flagged `synthetic` encode parameter combinations no smooth curve
/// realizes (h = 0 boundary cases); they bypass the realizability checks and
/// may carry negative entries.
struct BTable {
    int g = 0;
    long q = 0;
    Int h = 1;
    bool synthetic = false;
    std::vector<std::vector<Int>> finite; // finite[n][k], rows n = 0..max(2g-2,0)

    int finite_max_n() const { return std::max(2 * g - 2, 0); }
    int tail_start() const { return std::max(2 * g - 1, 1); }

    /// Tail-aware lookup, 0 outside the populated ranges.
    Int b(long n, long k) const {
        if (n < 0 || k < 0) return 0;
        if (n <= finite_max_n()) {
            const auto& row = finite[static_cast<size_t>(n)];
            if (k >= static_cast<long>(row.size())) return 0;
            return row[static_cast<size_t>(k)];
        }
        return (k == n + 1 - g) ? h : Int(0);
    }
};

inline void validate_btable(const BTable& bt) {
    if (bt.g < 0 || bt.g > 2)
        throw std::domain_error("btable: only genus 0, 1, 2 tables are supported");
    if (static_cast<int>(bt.finite.size()) != bt.finite_max_n() + 1)
        throw std::domain_error("btable: finite range must cover n = 0..max(2g-2,0)");
    if (bt.b(0, 1) != 1)
        throw std::domain_error("btable: b_{0,1} must be 1 (the trivial class)");
    for (long k = 0; k <= bt.g + 2; ++k)
        if (k != 1 && bt.b(0, k) != 0)
            throw std::domain_error("btable: b_{0,k} must vanish for k != 1");
    if (bt.synthetic) return;
    if (bt.h < 1) throw std::domain_error("btable: class number must be >= 1 for a curve table");
    for (int n = 0; n <= bt.finite_max_n(); ++n) {
        Int row_sum = 0;
        for (const Int& e : bt.finite[static_cast<size_t>(n)]) {
            if (e < 0) throw std::domain_error("btable: negative entry in row n=" + std::to_string(n));
            row_sum += e;
        }
        if (row_sum > bt.h)
            throw std::domain_error("btable: sum of row n=" + std::to_string(n) + " exceeds h");
    }
}

/// Genus 0: a single class per degree, h^0 = n+1. h = 1 and P must come out
/// as the constant 1 downstream.
inline BTable btable_g0(long q) {
    BTable bt;
    bt.g = 0;
    bt.q = q;
    bt.h = 1;
    bt.finite = {{Int(0), Int(1)}};
    validate_btable(bt);
    return bt;
}

/// Genus 1: h = N and Riemann-Roch already applies from degree 1, so the
/// finite range is just the trivial class in degree 0.
inline BTable btable_g1(long q, const Int& N, bool synthetic = false) {
    BTable bt;
    bt.g = 1;
    bt.q = q;
    bt.h = N;
    bt.synthetic = synthetic;
    bt.finite = {{Int(0), Int(1)}};
    if (!synthetic && N < 1)
        throw std::domain_error("btable: N >= 1 fails (genus-1 curves always have a point); "
                                "pass synthetic to build it anyway");
    validate_btable(bt);
    return bt;
}

/// Genus 2, from the zeta parameters (q, a, b) of L = 1+at+bt^2+qat^3+q^2t^4.
/// The finite rows encode hyperelliptic structure: N_1 = q+1+a point classes
/// in degree 1 (b_{1,2} = 0 by Clifford), the canonical class as the unique
/// degree-2 class with h^0 = 2, and b_{2,1} = A_2 - (q+1) where A_2 is the
/// number of degree-2 effective divisors.
inline BTable btable_g2(long q, const Int& a, const Int& b, bool synthetic = false) {
    BTable bt;
    bt.g = 2;
    bt.q = q;
    bt.synthetic = synthetic;
    bt.h = b + a * (q + 1) + Int(q) * q + 1;
    const Int b11 = Int(q) + 1 + a;
    const Int A2 = b + a * (1 + q) + (1 + q + Int(q) * q);
    const Int b21 = A2 - (q + 1);
    bt.finite = {{Int(0), Int(1)}, {Int(0), b11}, {Int(0), b21, Int(1)}};
    if (!synthetic) {
        if (bt.h < 1)
            throw std::domain_error("btable: h = b + a(q+1) + q^2 + 1 < 1 is not realizable; "
                                    "pass synthetic to build it anyway");
        if (b21 < 0 || b11 < 0)
            throw std::domain_error("btable: negative class count, (q,a,b) not realizable; "
                                    "pass synthetic to build it anyway");
    }
    validate_btable(bt);
    return bt;
}

} // namespace bizeta
