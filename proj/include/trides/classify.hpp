#pragma once

// Parameter classification: which of the known flag-transitive triple-design
// families could host a given admissible pair (v, lambda). The classifier
// answers "could host", not "a design exists": case 1 is a family of
// candidates constrained by congruences, not an existence list.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "trides/design.hpp"
#include "trides/errors.hpp"
#include "trides/util.hpp"

namespace trides {

enum class design_case {
    case1_gammal1,           // v = p^d, p = 3 with d odd or p^d = 7 (mod 12), lambda | d
    case2_pg_triples,        // collinear triples of PG(h-1,q), q even
    case2b_a7,               // the (h,q) = (4,2) point of case 2
    case3_pg_triangles_q5,   // triangles of PG(h-1,5), h odd
    case4_ag3,               // lines of AG(h,3)
};

inline const char* case_name(design_case c) {
    switch (c) {
        case design_case::case1_gammal1: return "CASE1_GAMMAL1";
        case design_case::case2_pg_triples: return "CASE2_PG_TRIPLES";
        case design_case::case2b_a7: return "CASE2B_A7";
        case design_case::case3_pg_triangles_q5: return "CASE3_PG_TRIANGLES_Q5";
        case design_case::case4_ag3: return "CASE4_AG3";
    }
    return "?";
}

struct case_witness {
    design_case c{};
    std::vector<std::pair<std::uint64_t, std::uint32_t>> witnesses;  // (p,d) or (q,h)
};

struct classification_outcome {
    bool admissible = false;
    std::vector<case_witness> cases;  // canonical case order, only realized cases

    bool has(design_case c) const {
        for (const auto& cw : cases)
            if (cw.c == c) return true;
        return false;
    }
    const case_witness* find(design_case c) const {
        for (const auto& cw : cases)
            if (cw.c == c) return &cw;
        return nullptr;
    }
};

struct condition_check {
    bool ok = false;
    std::string reason;  // first failing clause, empty when ok
};

// q even, q-1 | h-6, and h = 0 (mod 3) whenever q = 1 (mod 3).
inline condition_check check_case2_conditions(std::uint64_t q, std::uint32_t h) {
    if (q % 2 != 0) return {false, "q is odd"};
    if ((static_cast<std::int64_t>(h) - 6) % static_cast<std::int64_t>(q - 1) != 0)
        return {false, "q-1 does not divide h-6"};
    if (q % 3 == 1 && h % 3 != 0) return {false, "h != 0 (mod 3) while q = 1 (mod 3)"};
    return {true, ""};
}

// (p = 3 and d odd) or p^d = 7 (mod 12); m odd; e even; gcd(m,e) = 1;
// ms | d; every prime divisor of m divides p^s - 1.
inline condition_check check_case1_conditions(std::uint64_t p, std::uint32_t d, std::uint64_t m,
                                              std::uint64_t e, std::uint64_t s) {
    if (!is_prime(p)) throw composite_p("p = " + std::to_string(p) + " is not prime");
    if (!((p == 3 && d % 2 == 1) || modpow(p, d, 12) == 7))
        return {false, "neither p=3 with d odd nor p^d = 7 (mod 12)"};
    if (m % 2 == 0) return {false, "m is even"};
    if (e % 2 != 0) return {false, "e is odd"};
    if (std::gcd(m, e) != 1) return {false, "gcd(m, e) != 1"};
    if (m * s == 0 || d % (m * s) != 0) return {false, "ms does not divide d"};
    for (auto [r, exp] : factorize(m)) {
        (void)exp;
        if (modpow(p, s, r) != 1) return {false, "a prime divisor of m does not divide p^s - 1"};
    }
    return {true, ""};
}

namespace detail {

inline constexpr std::uint64_t witness_q_max = 1024;  // witness search box
inline constexpr std::uint32_t witness_h_max = 20;

}  // namespace detail

inline classification_outcome classify(std::int64_t v, std::int64_t lambda) {
    classification_outcome out;
    out.admissible = admissible(v, lambda);  // validates v > 3, lambda >= 1
    if (!out.admissible) return out;
    const std::uint64_t uv = static_cast<std::uint64_t>(v);

    // Case 1: v = p^d with (p = 3, d odd) or p^d = 7 (mod 12), and lambda | d
    // (lambda = d / (m s |G_{0,B}|) forces the divisibility).
    if (auto pp = prime_power_decomp(uv)) {
        auto [p, d] = *pp;
        bool congruence = (p == 3 && d % 2 == 1) || uv % 12 == 7;
        if (congruence && d % static_cast<std::uint64_t>(lambda) == 0)
            out.cases.push_back({design_case::case1_gammal1, {{p, d}}});
    }

    // Case 2 (and 2b at (h,q) = (4,2)): v = (q^h-1)/(q-1), lambda = q-1, plus
    // the parity and congruence conditions. Exhaustive over the witness box.
    {
        case_witness w2{design_case::case2_pg_triples, {}};
        bool a7 = false;
        for (std::uint64_t q = 2; q <= detail::witness_q_max; ++q) {
            if (static_cast<std::int64_t>(q) - 1 != lambda || !prime_power_decomp(q)) continue;
            std::uint64_t series = 1, power = 1;
            for (std::uint32_t h = 2; h <= detail::witness_h_max; ++h) {
                if (power > uv) break;
                power *= q;
                series += power;
                if (series > uv) break;
                if (series == uv && check_case2_conditions(q, h).ok) {
                    w2.witnesses.emplace_back(q, h);
                    if (q == 2 && h == 4) a7 = true;
                }
            }
        }
        if (!w2.witnesses.empty()) out.cases.push_back(std::move(w2));
        if (a7) out.cases.push_back({design_case::case2b_a7, {{2, 4}}});
    }

    // Case 3: v = (5^h-1)/4 with h odd, lambda = 25(5^(h-2)-1)/4.
    {
        case_witness w3{design_case::case3_pg_triangles_q5, {}};
        std::uint64_t series = 1, power = 1;        // series = (5^h-1)/4 at degree h
        std::uint64_t lam_series = 0, lam_pow = 1;  // (5^(h-2)-1)/4 at degree h
        for (std::uint32_t h = 2; h <= detail::witness_h_max; ++h) {
            power *= 5;
            series += power;
            if (h >= 3) {
                lam_series += lam_pow;
                lam_pow *= 5;
            }
            if (series > uv) break;
            if (h % 2 == 1 && series == uv && 25 * lam_series == static_cast<std::uint64_t>(lambda))
                w3.witnesses.emplace_back(5, h);
        }
        if (!w3.witnesses.empty()) out.cases.push_back(std::move(w3));
    }

    // Case 4: v = 3^h, h >= 2, lambda = 1.
    if (lambda == 1) {
        std::uint64_t power = 9;
        for (std::uint32_t h = 2; h <= detail::witness_h_max && power <= uv; ++h, power *= 3) {
            if (power == uv) {
                out.cases.push_back({design_case::case4_ag3, {{3, h}}});
                break;
            }
        }
    }
    return out;
}

}  // namespace trides
