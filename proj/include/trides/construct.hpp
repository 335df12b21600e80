#pragma once

// The four design families: collinear triples of PG(h-1,q), triangles of
// PG(h-1,q), lines of AG(h,3), and orbit designs of a base block under a
// one-dimensional affine group. Closed-form parameter predictions live next
// to the enumerating constructors so the two routes can be checked against
// each other.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trides/design.hpp"
#include "trides/errors.hpp"
#include "trides/geometry.hpp"
#include "trides/perm.hpp"

namespace trides {

enum class family_kind { pg_triples, pg_triangles, ag3, affine_orbit };

struct family_params {
    std::uint64_t q = 0;
    std::uint32_t h = 0;
};

struct family_prediction {
    family_kind family{};
    std::uint64_t v = 0, b = 0, r = 0, lambda = 0;
};

namespace detail {

inline std::uint64_t exact_div(unsigned __int128 num, unsigned __int128 den, const char* what) {
    if (den == 0 || num % den != 0) throw error(std::string("non-exact division in ") + what);
    unsigned __int128 q = num / den;
    if (q > ~std::uint64_t{0}) throw size_exceeded(std::string(what) + " overflows u64");
    return static_cast<std::uint64_t>(q);
}

}  // namespace detail

// Pure formula evaluation, no enumeration.
inline family_prediction predict_family(family_kind family, const family_params& P) {
    using u128 = unsigned __int128;
    family_prediction out;
    out.family = family;
    switch (family) {
        case family_kind::pg_triples: {
            if (P.h < 2) throw domain_error("PG triples need h >= 2");
            if (P.q < 2) throw domain_error("q must be >= 2");
            const std::uint64_t qh = checked_pow(P.q, P.h);
            out.v = (qh - 1) / (P.q - 1);
            out.lambda = P.q - 1;
            out.r = detail::exact_div(u128(out.lambda) * (out.v - 1), 2, "replication count");
            // b = #lines * C(q+1, 3)
            std::uint64_t line_triples =
                detail::exact_div(u128(P.q + 1) * P.q * (P.q - 1), 6, "triples per line");
            out.b = checked_mul(gaussian(P.h, 2, P.q), line_triples);
            return out;
        }
        case family_kind::pg_triangles: {
            if (P.h < 3) throw domain_error("triangles need h >= 3: in PG(1,q) every triple is collinear");
            if (P.q < 2) throw domain_error("q must be >= 2");
            const std::uint64_t qh = checked_pow(P.q, P.h);
            const std::uint64_t qh1 = qh / P.q, qh2 = qh1 / P.q;
            const std::uint64_t q1 = P.q - 1;
            out.v = (qh - 1) / q1;
            out.lambda = detail::exact_div(u128(P.q) * P.q * (qh2 - 1), q1, "lambda");
            out.r = detail::exact_div(u128(P.q) * P.q * P.q * (qh1 - 1) * (qh2 - 1),
                                      u128(2) * q1 * q1, "replication count");
            out.b = detail::exact_div(u128(P.q) * P.q * P.q * (qh - 1) * (qh1 - 1) * (qh2 - 1),
                                      u128(6) * q1 * q1 * q1, "block count");
            return out;
        }
        case family_kind::ag3: {
            if (P.h < 2) throw domain_error("AG(h,3) needs h >= 2");
            const std::uint64_t v = checked_pow(3, P.h);
            out.v = v;
            out.lambda = 1;
            out.r = (v - 1) / 2;
            out.b = detail::exact_div(u128(v) / 3 * (v - 1), 2, "block count");
            return out;
        }
        case family_kind::affine_orbit:
            throw domain_error("affine orbit designs have no closed-form prediction");
    }
    throw domain_error("unknown family");
}

// All 3-subsets of lines of PG(h-1,q).
inline std::pair<design, family_prediction> pg_collinear_triples(std::uint64_t q, std::uint32_t h) {
    auto g = build_pg(q, h);
    std::vector<block_t> blocks;
    blocks.reserve(g.lines.size() * (q + 1) * q * (q - 1) / 6);
    for (const auto& ln : g.lines)
        for (std::size_t a = 0; a < ln.size(); ++a)
            for (std::size_t b = a + 1; b < ln.size(); ++b)
                for (std::size_t c = b + 1; c < ln.size(); ++c)
                    blocks.push_back({ln[a], ln[b], ln[c]});
    auto dsg = design::make(static_cast<std::uint32_t>(g.v()), std::move(blocks),
                            "pg-triples:q=" + std::to_string(q) + ",h=" + std::to_string(h));
    return {std::move(dsg), predict_family(family_kind::pg_triples, {q, h})};
}

// All non-collinear 3-subsets of PG(h-1,q), by exhaustive filter.
inline std::pair<design, family_prediction> pg_triangles(std::uint64_t q, std::uint32_t h) {
    if (h < 3) throw domain_error("triangles need h >= 3: in PG(1,q) every triple is collinear");
    auto g = build_pg(q, h);
    const pt v = static_cast<pt>(g.v());
    std::vector<block_t> blocks;
    std::vector<char> on_line(v, 0);
    for (pt i = 0; i < v; ++i) {
        for (pt j = i + 1; j < v; ++j) {
            const auto& ln = g.lines[g.line_through(i, j)];
            for (pt x : ln) on_line[x] = 1;
            for (pt k = j + 1; k < v; ++k)
                if (!on_line[k]) blocks.push_back({i, j, k});
            for (pt x : ln) on_line[x] = 0;
        }
    }
    auto dsg = design::make(v, std::move(blocks),
                            "pg-triangles:q=" + std::to_string(q) + ",h=" + std::to_string(h));
    return {std::move(dsg), predict_family(family_kind::pg_triangles, {q, h})};
}

// Lines of AG(h,3): the unique 2-(3^h, 3, 1) design on the affine space.
inline std::pair<design, family_prediction> ag3_lines(std::uint32_t h) {
    auto g = build_ag3(h);
    auto dsg = design::make(static_cast<std::uint32_t>(g.v), g.lines, "ag3:h=" + std::to_string(h));
    return {std::move(dsg), predict_family(family_kind::ag3, {0, h})};
}

struct affine_orbit_spec {
    std::uint32_t p = 0, d = 1, m = 1;
    std::uint64_t e = 2, s = 1;
    std::uint64_t s_exp = 0, t_exp = 0;  // base block {0, w^(2m*s_exp), w^(2m*t_exp+1)}
};

struct affine_orbit_result {
    design dsg;
    perm_group group;
    design_params params;
    bool flag_transitive = false;
    std::uint32_t rank = 0;
    std::vector<std::uint64_t> nondiag_orbital_sizes;
    bool lambda_divides_v_minus_6 = false;
};

// Construct-and-certify: builds T:G0 and the orbit of the base block, then
// reports what actually holds (2-design-ness, flag-transitivity, rank, and
// the lambda | p^d - 6 divisibility). Not every parameter choice yields a
// 2-design; the result carries the certificates instead of a promise.
inline affine_orbit_result affine_orbit_design(const affine_orbit_spec& S) {
    if (S.p == 2) throw even_characteristic("affine orbit designs need odd characteristic");
    auto group = affine_one_dim_group(S.p, S.d, S.m, S.e, S.s);
    field_table F = build_field(S.p, S.d);
    const std::uint64_t n = F.order();
    if (S.s_exp >= n || S.t_exp >= n)
        throw domain_error("base block exponents must lie in [0, p^d - 1)");

    block_t base{0, F.from_log(2 * std::uint64_t{S.m} * S.s_exp % n),
                 F.from_log((2 * std::uint64_t{S.m} * S.t_exp + 1) % n)};
    std::string prov = "affine-orbit:p=" + std::to_string(S.p) + ",d=" + std::to_string(S.d) +
                       ",m=" + std::to_string(S.m) + ",e=" + std::to_string(S.e) +
                       ",s=" + std::to_string(S.s) + ",sexp=" + std::to_string(S.s_exp) +
                       ",texp=" + std::to_string(S.t_exp);

    affine_orbit_result out{orbit_of_block(group, base, std::move(prov)), std::move(group), {}, false, 0, {}, false};
    out.params = verify_2design(out.dsg);
    out.flag_transitive = is_flag_transitive(out.group, out.dsg);
    auto rank_rep = pair_rank(out.group);
    out.rank = rank_rep.rank;
    out.nondiag_orbital_sizes = rank_rep.nondiagonal_sizes();
    if (out.params.is_2design && out.params.lambda > 0) {
        std::int64_t vm6 = static_cast<std::int64_t>(F.size()) - 6;
        out.lambda_divides_v_minus_6 = vm6 % static_cast<std::int64_t>(out.params.lambda) == 0;
    }
    return out;
}

}  // namespace trides
