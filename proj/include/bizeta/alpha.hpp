#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bizeta/btable.hpp"
#include "bizeta/report.hpp"
#include "bizeta/zeta.hpp"

namespace bizeta {

/// The coefficient matrix of P: alpha_{ik} with P_i(u) = sum_k alpha_{ik} u^k,
/// 0 <= i <= 2g, 0 <= k <= g. Out-of-range reads (including k < 0) are 0.
struct AlphaMatrix {
    int g = 0;
    std::vector<std::vector<Int>> a; // a[i][k]

    Int at(long i, long k) const {
        if (i < 0 || i >= static_cast<long>(a.size())) return 0;
        const auto& row = a[static_cast<size_t>(i)];
        if (k < 0 || k >= static_cast<long>(row.size())) return 0;
        return row[static_cast<size_t>(k)];
    }
};

/// Extract the alpha matrix from P, asserting alpha_{00} = 1 and the degree
/// bound alpha_{ik} = 0 for k > floor(i/2) + 1.
inline AlphaMatrix alpha_matrix(const PPoly& p) {
    validate_ppoly(p);
    AlphaMatrix A;
    A.g = p.g;
    A.a.assign(static_cast<size_t>(2 * p.g) + 1, std::vector<Int>(static_cast<size_t>(p.g) + 1, 0));
    for (int i = 0; i <= 2 * p.g; ++i)
        for (int k = 0; k <= p.g; ++k)
            A.a[static_cast<size_t>(i)][static_cast<size_t>(k)] = p.poly.coeff(i, k).to_int();
    if (A.at(0, 0) != 1) throw std::domain_error("alpha_matrix: alpha_00 != 1");
    for (int i = 0; i <= 2 * p.g; ++i)
        for (int k = i / 2 + 2; k <= p.g; ++k)
            if (A.at(i, k) != 0)
                throw std::domain_error("alpha_matrix: degree bound violated at (i,k) = (" +
                                        std::to_string(i) + "," + std::to_string(k) + ")");
    return A;
}

/// b_{nu,mu} recovered from the alpha matrix:
/// b_{nu,mu} = sum_{i=0}^{nu} (alpha_{i,mu-nu-1+i} - alpha_{i,mu}).
inline Int b_from_alpha(const AlphaMatrix& A, long nu, long mu) {
    if (nu < 0 || mu < 1) throw std::domain_error("b_from_alpha: need nu >= 0, mu >= 1");
    Int acc = 0;
    for (long i = 0; i <= nu; ++i)
        acc += A.at(i, mu - nu - 1 + i) - A.at(i, mu);
    return acc;
}

/// Verify both halves of the coefficient identity between the b-table and
/// the alpha matrix over the requested window:
///  part 1:  sum_{k >= a+1} b_{nu,k} = sum_{mu,i >= 0, mu+i <= nu} alpha_{i,a-mu}
///  part 2:  b_{nu,mu} (from alpha) = table entry, tail included.
inline CheckReport cumulative_identity_check(const AlphaMatrix& A, const BTable& bt,
                                             long max_nu, long max_alpha) {
    CheckReport report;
    for (long nu = 0; nu <= max_nu; ++nu) {
        for (long al = 0; al <= max_alpha; ++al) {
            Int lhs = 0;
            // the tail contributes at most one nonzero entry, at k = nu+1-g
            const long k_hi = std::max<long>(nu + 2, bt.g + 2);
            for (long k = al + 1; k <= k_hi; ++k) lhs += bt.b(nu, k);
            Int rhs = 0;
            for (long i = 0; i <= nu; ++i)
                for (long mu = 0; mu + i <= nu; ++mu)
                    rhs += A.at(i, al - mu);
            report.add("cum-part1-nu" + std::to_string(nu) + "-a" + std::to_string(al), lhs == rhs,
                       "lhs=" + lhs.get_str() + " rhs=" + rhs.get_str());
        }
        for (long mu = 1; mu <= max_nu + 2; ++mu) {
            const Int via_alpha = b_from_alpha(A, nu, mu);
            const Int direct = bt.b(nu, mu);
            report.add("cum-part2-nu" + std::to_string(nu) + "-mu" + std::to_string(mu),
                       via_alpha == direct,
                       "alpha-route=" + via_alpha.get_str() + " table=" + direct.get_str());
        }
    }
    return report;
}

} // namespace bizeta
