#pragma once

// Exact arithmetic in GF(p^d) on discrete-log tables.
//
// Elements are indexed 0..p^d-1: index 0 is the zero element and index i >= 1
// stands for w^(i-1), where w is the designated primitive element. With that
// indexing, multiplication is exponent addition mod p^d-1 and addition goes
// through a Zech logarithm table z with w^z(n) = w^n + 1.
//
// Construction is deterministic: the modulus is the lexicographically
// smallest monic primitive polynomial of degree d over GF(p) (coefficient
// lists compared constant term first), and w is the first element of full
// multiplicative order when elements are scanned in constant-term-first
// lexicographic coordinate order. For prime fields this makes w the smallest
// primitive root of p.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "trides/errors.hpp"
#include "trides/util.hpp"

namespace trides {

using elem = std::uint32_t;

inline constexpr std::uint64_t max_field_size = std::uint64_t{1} << 20;

struct field_spec {
    std::uint32_t p = 0;
    std::uint32_t d = 0;
    std::vector<std::uint32_t> modulus;  // monic, constant term first, length d+1
};

namespace detail {

// Residue arithmetic in GF(p)[x]/(f), with residues as coefficient vectors
// (constant term first). Only used while building field tables.
struct poly_ring {
    std::uint32_t p;
    std::uint32_t d;
    std::vector<std::uint32_t> f;  // monic modulus, length d+1

    std::vector<std::uint32_t> one() const {
        std::vector<std::uint32_t> r(d, 0);
        r[0] = 1;
        return r;
    }

    // Residue of the polynomial x.
    std::vector<std::uint32_t> x_residue() const {
        std::vector<std::uint32_t> r(d, 0);
        if (d == 1)
            r[0] = (p - f[0]) % p;  // x = -f0 mod (x + f0)
        else
            r[1] = 1;
        return r;
    }

    std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b) const {
        std::vector<std::uint64_t> prod(2 * d - 1, 0);
        for (std::uint32_t i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (std::uint32_t j = 0; j < d; ++j)
                prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
        }
        // reduce x^k = -sum f_i x^(k-d+i) for k >= d, top down
        for (std::uint32_t k = 2 * d - 2; k + 1 > d; --k) {
            std::uint64_t c = prod[k] % p;
            prod[k] = 0;
            if (!c) continue;
            for (std::uint32_t i = 0; i < d; ++i)
                prod[k - d + i] += c * (p - f[i] % p);
        }
        std::vector<std::uint32_t> r(d);
        for (std::uint32_t i = 0; i < d; ++i) r[i] = static_cast<std::uint32_t>(prod[i] % p);
        return r;
    }

    // a * x mod f, O(d).
    std::vector<std::uint32_t> mul_by_x(const std::vector<std::uint32_t>& a) const {
        std::vector<std::uint32_t> r(d, 0);
        std::uint32_t carry = a[d - 1];
        for (std::uint32_t i = d - 1; i > 0; --i) r[i] = a[i - 1];
        r[0] = 0;
        if (carry)
            for (std::uint32_t i = 0; i < d; ++i)
                r[i] = (r[i] + static_cast<std::uint64_t>(carry) * (p - f[i] % p)) % p;
        return r;
    }

    std::vector<std::uint32_t> pow(std::vector<std::uint32_t> base, std::uint64_t e) const {
        auto acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    bool is_one(const std::vector<std::uint32_t>& a) const {
        if (a[0] != 1) return false;
        for (std::uint32_t i = 1; i < d; ++i)
            if (a[i]) return false;
        return true;
    }
};

}  // namespace detail

class field_table {
public:
    field_table() = default;

    static field_table build(std::uint32_t p, std::uint32_t d);

    std::uint32_t p() const { return p_; }
    std::uint32_t d() const { return d_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t order() const { return n_; }  // p^d - 1
    const field_spec& spec() const { return spec_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem omega() const { return from_log(1); }

    elem from_log(std::uint64_t n) const { return static_cast<elem>(n % n_) + 1; }

    std::uint64_t log_of(elem x) const {
        check(x);
        if (!x) throw zero_argument("log of zero");
        return x - 1;
    }

    elem mul(elem a, elem b) const {
        check(a);
        check(b);
        if (!a || !b) return 0;
        return from_log(static_cast<std::uint64_t>(a - 1) + (b - 1));
    }

    elem add(elem a, elem b) const {
        check(a);
        check(b);
        if (!a) return b;
        if (!b) return a;
        std::uint64_t x = a - 1, y = b - 1;
        std::uint64_t k = y >= x ? y - x : y + n_ - x;  // w^x + w^y = w^x(1 + w^k)
        std::uint32_t z = zech_[k];
        if (z == zech_none) return 0;
        return from_log(x + z);
    }

    elem neg(elem a) const {
        check(a);
        if (p_ == 2 || !a) return a;
        return from_log(static_cast<std::uint64_t>(a - 1) + half_);
    }

    elem sub(elem a, elem b) const { return add(a, neg(b)); }

    elem inv(elem a) const {
        check(a);
        if (!a) throw zero_argument("inverse of zero");
        return from_log(n_ - (a - 1) % n_);
    }

    elem pow(elem a, std::int64_t k) const {
        check(a);
        if (!a) {
            if (k < 0) throw zero_argument("negative power of zero");
            return k == 0 ? one() : zero();
        }
        std::int64_t n = static_cast<std::int64_t>(n_);
        std::uint64_t ke = static_cast<std::uint64_t>(((k % n) + n) % n);
        return from_log(mulmod(a - 1, ke, n_));
    }

    // x^(p^s); a field automorphism for every s, identity at s = d.
    elem frobenius(elem x, std::uint64_t s) const {
        check(x);
        if (!x) return 0;
        return from_log(mulmod(x - 1, modpow(p_, s, n_), n_));
    }

    // True iff x is a nonzero square, i.e. its discrete log is even.
    bool is_square(elem x) const {
        if (p_ == 2) throw even_characteristic("squares are not a proper subgroup in characteristic 2");
        check(x);
        if (!x) throw zero_argument("is_square of zero");
        return ((x - 1) & 1) == 0;
    }

    // Coefficient vector over GF(p), constant term first, length d.
    std::vector<std::uint32_t> coords_of(elem x) const {
        check(x);
        std::uint64_t packed = x ? packed_of_log_[x - 1] : 0;
        std::vector<std::uint32_t> out(d_);
        for (std::uint32_t i = 0; i < d_; ++i) {
            out[i] = packed % p_;
            packed /= p_;
        }
        return out;
    }

    elem from_coords(const std::vector<std::uint32_t>& c) const {
        if (c.size() != d_) throw index_error("coordinate vector has wrong length");
        std::uint64_t packed = 0;
        for (std::uint32_t i = d_; i > 0; --i) {
            if (c[i - 1] >= p_) throw index_error("coordinate out of range");
            packed = packed * p_ + c[i - 1];
        }
        return index_of_packed_[packed];
    }

private:
    static constexpr std::uint32_t zech_none = 0xFFFFFFFFu;

    field_spec spec_;
    std::uint32_t p_ = 0, d_ = 0;
    std::uint64_t size_ = 0, n_ = 0, half_ = 0;
    std::vector<std::uint32_t> zech_;           // exponent of w^n + 1, or zech_none
    std::vector<std::uint32_t> packed_of_log_;  // log -> base-p packed coordinates
    std::vector<elem> index_of_packed_;         // packed coordinates -> element index

    void check(elem x) const {
        if (x >= size_) throw index_error("element index " + std::to_string(x) + " out of range");
    }
};

inline field_table field_table::build(std::uint32_t p, std::uint32_t d) {
    if (!is_prime(p)) throw composite_p("p = " + std::to_string(p) + " is not prime");
    if (d < 1) throw domain_error("field degree must be >= 1");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        size *= p;
        if (size > max_field_size)
            throw size_exceeded("p^d exceeds the 2^20 field size cap");
    }
    const std::uint64_t n = size - 1;
    const auto n_factors = factorize(n);

    // Lexicographically smallest monic primitive modulus: scan coefficient
    // tuples (a0,...,a_{d-1}) ascending with a0 most significant. a0 = 0 is
    // skipped (x divides f, so x cannot generate).
    detail::poly_ring ring{p, d, {}};
    std::vector<std::uint32_t> coeffs(d + 1, 0);
    coeffs[d] = 1;
    bool found = false;
    std::vector<std::uint32_t> tuple(d, 0);
    tuple[0] = 1;
    auto next_tuple = [&]() {
        for (std::uint32_t i = d; i > 0; --i) {
            if (++tuple[i - 1] < p) return true;
            tuple[i - 1] = 0;
        }
        return false;
    };
    do {
        if (tuple[0] == 0) continue;
        for (std::uint32_t i = 0; i < d; ++i) coeffs[i] = tuple[i];
        ring.f = coeffs;
        auto x = ring.x_residue();
        if (n > 1 && !ring.is_one(ring.pow(x, n))) continue;
        bool primitive = true;
        for (auto [r, e] : n_factors) {
            (void)e;
            if (ring.is_one(ring.pow(x, n / r))) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            found = true;
            break;
        }
    } while (next_tuple());
    if (!found) throw error("no primitive polynomial found");  // unreachable for prime p

    field_table ft;
    ft.spec_ = field_spec{p, d, coeffs};
    ft.p_ = p;
    ft.d_ = d;
    ft.size_ = size;
    ft.n_ = n;
    ft.half_ = n / 2;

    // Powers of the modulus root x, packed base p (constant term = digit 0).
    auto pack = [&](const std::vector<std::uint32_t>& v) {
        std::uint64_t acc = 0;
        for (std::uint32_t i = d; i > 0; --i) acc = acc * p + v[i - 1];
        return acc;
    };
    std::vector<std::uint32_t> pow_x(n);
    std::vector<std::uint32_t> log_x(size, zech_none);
    {
        auto cur = ring.one();
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t packed = pack(cur);
            pow_x[i] = static_cast<std::uint32_t>(packed);
            log_x[packed] = static_cast<std::uint32_t>(i);
            cur = ring.mul_by_x(cur);
        }
    }

    // w: first full-order element in constant-term-first lex coordinate order.
    std::uint64_t omega_log_x = 0;
    {
        std::vector<std::uint32_t> c(d, 0);
        bool got = false;
        auto bump = [&]() {
            for (std::uint32_t i = d; i > 0; --i) {
                if (++c[i - 1] < p) return true;
                c[i - 1] = 0;
            }
            return false;
        };
        while (bump()) {
            std::uint64_t packed = 0;
            for (std::uint32_t i = d; i > 0; --i) packed = packed * p + c[i - 1];
            std::uint64_t l = log_x[packed];
            if (std::gcd(l, n) == 1) {
                omega_log_x = l;
                got = true;
                break;
            }
        }
        if (!got) throw error("no primitive element found");  // unreachable
    }

    // Re-index every table to powers of w.
    ft.packed_of_log_.resize(n);
    ft.index_of_packed_.assign(size, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint32_t packed = pow_x[mulmod(omega_log_x, i, n)];
        ft.packed_of_log_[i] = packed;
        ft.index_of_packed_[packed] = static_cast<elem>(i) + 1;
    }
    ft.index_of_packed_[0] = 0;

    ft.zech_.assign(n, zech_none);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t packed = ft.packed_of_log_[i];
        std::uint32_t c0 = packed % p;
        std::uint64_t bumped = c0 + 1 == p ? packed - c0 : packed + 1;
        if (bumped == 0) continue;  // w^i = -1
        ft.zech_[i] = ft.index_of_packed_[bumped] - 1;
    }
    return ft;
}

inline field_table build_field(std::uint32_t p, std::uint32_t d) { return field_table::build(p, d); }

inline elem frobenius(const field_table& ft, elem x, std::uint64_t s) { return ft.frobenius(x, s); }
inline bool is_square(const field_table& ft, elem x) { return ft.is_square(x); }

}  // namespace trides
