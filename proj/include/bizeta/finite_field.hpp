#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bizeta {

/// Description of a finite field F_{p^m}: a prime p, an extension degree m,
/// and for m > 1 a monic irreducible modulus over F_p (coefficients ascending,
/// modulus[m] = 1). Desk-scale bounds: p <= 13, m <= 4.
struct FieldSpec {
    long p = 2;
    int m = 1;
    std::vector<long> modulus; // empty when m == 1
};

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic for F_{p^m}. Elements are encoded as integers in [0, q):
/// the base-p digits of the code are the coefficients of the residue
/// polynomial. Tables are built once at construction; instances are
/// immutable afterwards and safe to share across threads.
class Field {
public:
    explicit Field(FieldSpec spec) : spec_(std::move(spec)) {
        if (!is_prime_long(spec_.p)) throw std::domain_error("Field: p is not prime");
        if (spec_.p > 13) throw std::domain_error("Field: p > 13 exceeds the supported desk-scale bound");
        if (spec_.m < 1 || spec_.m > 4) throw std::domain_error("Field: extension degree must be 1..4");
        q_ = 1;
        for (int i = 0; i < spec_.m; ++i) q_ *= spec_.p;
        if (spec_.m == 1) {
            spec_.modulus.clear();
        } else {
            if (spec_.modulus.empty()) spec_.modulus = first_irreducible(spec_.p, spec_.m);
            normalize_modulus();
            if (!poly_irreducible(spec_.p, spec_.modulus))
                throw std::domain_error("Field: modulus is reducible over F_p");
        }
        build_tables();
    }

    const FieldSpec& spec() const { return spec_; }
    long p() const { return spec_.p; }
    int m() const { return spec_.m; }
    long q() const { return q_; }

    long zero() const { return 0; }
    long one() const { return 1; }

    /// Embed an integer via reduction mod p (the prime-field image of n).
    long from_int(long n) const {
        long r = n % spec_.p;
        return r < 0 ? r + spec_.p : r;
    }

    long add(long a, long b) const {
        if (spec_.m == 1) return (a + b) % spec_.p;
        long r = 0, pw = 1;
        for (int i = 0; i < spec_.m; ++i) {
            r += ((a % spec_.p + b % spec_.p) % spec_.p) * pw;
            a /= spec_.p;
            b /= spec_.p;
            pw *= spec_.p;
        }
        return r;
    }
    long neg(long a) const {
        if (spec_.m == 1) return (spec_.p - a) % spec_.p;
        long r = 0, pw = 1;
        for (int i = 0; i < spec_.m; ++i) {
            r += ((spec_.p - a % spec_.p) % spec_.p) * pw;
            a /= spec_.p;
            pw *= spec_.p;
        }
        return r;
    }
    long sub(long a, long b) const { return add(a, neg(b)); }

    long mul(long a, long b) const {
        if (!multab_.empty()) return multab_[static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b)];
        return mul_direct(a, b);
    }

    long pow(long a, long e) const {
        long r = 1;
        long base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    long inv(long a) const {
        if (a == 0) throw std::domain_error("Field: inverse of zero");
        return inv_[static_cast<size_t>(a)];
    }

    /// Number of y in F_q with y^2 = z (0, 1 or 2).
    int sqrt_count(long z) const { return sqrt_count_[static_cast<size_t>(z)]; }

    /// The element-wise image of this field inside ext = F_{p^{m*k}},
    /// obtained by sending the residue class of x to a root of our modulus.
    /// Only extensions of the same characteristic are supported.
    std::vector<long> embedding_into(const Field& ext) const {
        if (ext.p() != spec_.p || ext.m() % spec_.m != 0)
            throw std::domain_error("Field: no embedding into the requested field");
        std::vector<long> map(static_cast<size_t>(q_), 0);
        if (spec_.m == 1) {
            for (long a = 0; a < q_; ++a) map[static_cast<size_t>(a)] = a; // constants keep their code
            return map;
        }
        long root = -1;
        for (long e = 0; e < ext.q(); ++e) {
            long acc = 0, pw = 1;
            for (size_t i = 0; i < spec_.modulus.size(); ++i) {
                acc = ext.add(acc, ext.mul(ext.from_int(spec_.modulus[i]), pw));
                pw = ext.mul(pw, e);
            }
            if (acc == 0) { root = e; break; }
        }
        if (root < 0) throw std::logic_error("Field: modulus has no root in the extension");
        for (long a = 0; a < q_; ++a) {
            long acc = 0, pw = 1, digits = a;
            for (int i = 0; i < spec_.m; ++i) {
                acc = ext.add(acc, ext.mul(ext.from_int(digits % spec_.p), pw));
                pw = ext.mul(pw, root);
                digits /= spec_.p;
            }
            map[static_cast<size_t>(a)] = acc;
        }
        return map;
    }

    /// Exhaustive irreducibility test for a monic polynomial over F_p:
    /// trial division by every monic polynomial of degree 1..deg/2.
    static bool poly_irreducible(long p, const std::vector<long>& poly) {
        const int deg = static_cast<int>(poly.size()) - 1;
        if (deg < 1) return false;
        for (int d = 1; 2 * d <= deg; ++d) {
            long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long code = 0; code < count; ++code) {
                std::vector<long> div(static_cast<size_t>(d) + 1, 0);
                long c = code;
                for (int i = 0; i < d; ++i) { div[static_cast<size_t>(i)] = c % p; c /= p; }
                div[static_cast<size_t>(d)] = 1;
                if (poly_rem_is_zero(p, poly, div)) return false;
            }
        }
        return true;
    }

    /// Lexicographically-first monic irreducible of degree m over F_p; this
    /// is the built-in modulus used when the caller does not supply one.
    static std::vector<long> first_irreducible(long p, int m) {
        long count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<long> cand(static_cast<size_t>(m) + 1, 0);
            long c = code;
            for (int i = 0; i < m; ++i) { cand[static_cast<size_t>(i)] = c % p; c /= p; }
            cand[static_cast<size_t>(m)] = 1;
            if (poly_irreducible(p, cand)) return cand;
        }
        throw std::logic_error("Field: no irreducible polynomial found"); // unreachable
    }

private:
    long mul_direct(long a, long b) const {
        if (spec_.m == 1) return (a * b) % spec_.p;
        const int m = spec_.m;
        long da[4] = {0, 0, 0, 0}, db[4] = {0, 0, 0, 0};
        for (int i = 0; i < m; ++i) { da[i] = a % spec_.p; a /= spec_.p; }
        for (int i = 0; i < m; ++i) { db[i] = b % spec_.p; b /= spec_.p; }
        long prod[7] = {0, 0, 0, 0, 0, 0, 0};
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % spec_.p;
        for (int k = 2 * m - 2; k >= m; --k) {
            const long c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (int i = 0; i < m; ++i) {
                const int idx = k - m + i;
                prod[idx] = (prod[idx] + (spec_.p - spec_.modulus[static_cast<size_t>(i)] % spec_.p) * c) % spec_.p;
            }
        }
        long r = 0, pw = 1;
        for (int i = 0; i < m; ++i) { r += prod[i] * pw; pw *= spec_.p; }
        return r;
    }

    void normalize_modulus() {
        if (static_cast<int>(spec_.modulus.size()) != spec_.m + 1)
            throw std::domain_error("Field: modulus degree must equal m");
        for (auto& c : spec_.modulus) { c %= spec_.p; if (c < 0) c += spec_.p; }
        if (spec_.modulus.back() != 1)
            throw std::domain_error("Field: modulus must be monic");
    }

    void build_tables() {
        if (q_ <= 1024) {
            multab_.resize(static_cast<size_t>(q_) * static_cast<size_t>(q_));
            for (long a = 0; a < q_; ++a)
                for (long b = 0; b < q_; ++b)
                    multab_[static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b)] = mul_direct(a, b);
        }
        inv_.assign(static_cast<size_t>(q_), 0);
        for (long a = 1; a < q_; ++a) inv_[static_cast<size_t>(a)] = pow(a, q_ - 2);
        sqrt_count_.assign(static_cast<size_t>(q_), 0);
        for (long y = 0; y < q_; ++y) ++sqrt_count_[static_cast<size_t>(mul(y, y))];
    }

    static bool poly_rem_is_zero(long p, std::vector<long> num, const std::vector<long>& div) {
        const int dd = static_cast<int>(div.size()) - 1;
        for (int k = static_cast<int>(num.size()) - 1; k >= dd; --k) {
            const long c = num[static_cast<size_t>(k)] % p;
            if (c == 0) continue;
            for (int i = 0; i <= dd; ++i) {
                auto& t = num[static_cast<size_t>(k - dd + i)];
                t = ((t - c * div[static_cast<size_t>(i)]) % p + p) % p;
            }
        }
        for (int i = 0; i < dd; ++i)
            if (num[static_cast<size_t>(i)] % p != 0) return false;
        return true;
    }

    FieldSpec spec_;
    long q_ = 0;
    std::vector<long> multab_;
    std::vector<long> inv_;
    std::vector<int> sqrt_count_;
};

inline Field make_field(long p, int m, std::vector<long> modulus = {}) {
    return Field(FieldSpec{p, m, std::move(modulus)});
}

/// Shared default-modulus fields keyed by (p, m). Curve sweeps hit the same
/// extension thousands of times and the table construction would dominate;
/// instances are immutable, so sharing is safe.
inline const Field& cached_field(long p, int m) {
    static std::map<std::pair<long, int>, std::unique_ptr<Field>> cache;
    static std::mutex mu;
    const std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, m});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(p, m), std::make_unique<Field>(FieldSpec{p, m, {}})).first;
    return *it->second;
}

} // namespace bizeta
