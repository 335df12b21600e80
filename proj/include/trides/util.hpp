#pragma once

// Small integer helpers shared across the library: primality, factoring,
// modular exponentiation, overflow-checked products.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trides/errors.hpp"

namespace trides {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Trial-division factorization, (prime, exponent) pairs in ascending order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        unsigned e = 0;
        while (n % f == 0) { n /= f; ++e; }
        out.emplace_back(f, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// n = p^e with p prime, or nullopt.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decomp(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, b, mod);
        b = mulmod(b, b, mod);
        exp >>= 1;
    }
    return acc;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw size_exceeded("u64 overflow in product");
    return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r = checked_mul(r, base);
    return r;
}

}  // namespace trides
