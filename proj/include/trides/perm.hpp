#pragma once

// Generator-based permutation group actions and orbit engines. Groups are
// handled purely through orbit closure under the generators (for finite
// bijections the semigroup closure equals the group closure), which is all
// the transitivity / rank / flag-orbit certificates need. No stabilizer
// chains and no group orders.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "trides/design.hpp"
#include "trides/errors.hpp"
#include "trides/geometry.hpp"
#include "trides/gf.hpp"

namespace trides {

struct perm_group {
    std::uint32_t degree = 0;
    std::vector<std::vector<std::uint32_t>> gens;  // image form
    std::string label;

    static perm_group make(std::uint32_t degree, std::vector<std::vector<std::uint32_t>> gens,
                           std::string label = {}) {
        perm_group g;
        g.degree = degree;
        g.gens = std::move(gens);
        g.label = std::move(label);
        g.validate();
        return g;
    }

    void validate() const {
        if (degree == 0) throw domain_error("permutation group of degree 0");
        if (gens.empty()) throw domain_error("permutation group needs at least one generator");
        std::vector<char> seen(degree);
        for (const auto& g : gens) {
            if (g.size() != degree) throw domain_error("generator length != degree");
            std::fill(seen.begin(), seen.end(), 0);
            for (auto img : g) {
                if (img >= degree || seen[img]) throw domain_error("generator is not a permutation");
                seen[img] = 1;
            }
        }
    }
};

struct orbit_report {
    std::uint64_t domain_size = 0;
    std::vector<std::uint64_t> reps;   // minimum element per orbit, ascending
    std::vector<std::uint64_t> sizes;  // aligned with reps

    std::size_t orbit_count() const { return reps.size(); }

    std::vector<std::uint64_t> sorted_sizes() const {
        auto s = sizes;
        std::sort(s.begin(), s.end());
        return s;
    }
};

namespace detail {

// Orbit partition of [0, n) under the maps apply(g, x), g < gen_count.
// Representatives are the minimum of each orbit, discovered in ascending
// order, so the partition is independent of generator order and of the
// traversal discipline.
template <class Apply>
orbit_report orbit_partition(std::uint64_t n, std::size_t gen_count, Apply&& apply) {
    orbit_report rep;
    rep.domain_size = n;
    std::vector<char> seen(n, 0);
    std::vector<std::uint64_t> stack;
    for (std::uint64_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::uint64_t size = 0;
        stack.assign(1, start);
        seen[start] = 1;
        while (!stack.empty()) {
            std::uint64_t x = stack.back();
            stack.pop_back();
            ++size;
            for (std::size_t g = 0; g < gen_count; ++g) {
                std::uint64_t y = apply(g, x);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        rep.reps.push_back(start);
        rep.sizes.push_back(size);
    }
    return rep;
}

inline std::uint64_t pack_block(const block_t& b) {
    return (std::uint64_t(b[0]) << 42) | (std::uint64_t(b[1]) << 21) | b[2];
}

}  // namespace detail

inline orbit_report point_orbits(const perm_group& G) {
    G.validate();
    return detail::orbit_partition(G.degree, G.gens.size(),
                                   [&](std::size_t g, std::uint64_t x) { return std::uint64_t(G.gens[g][x]); });
}

struct pair_rank_report {
    std::uint32_t rank = 0;        // orbit count on ordered pairs, diagonal included
    orbit_report pair_orbits;      // over pair ids x*degree + y

    // Orbital sizes without the diagonal orbit (its representative is (0,0),
    // which is always pair id 0 for a transitive action).
    std::vector<std::uint64_t> nondiagonal_sizes() const {
        return {pair_orbits.sizes.begin() + 1, pair_orbits.sizes.end()};
    }
};

inline pair_rank_report pair_rank(const perm_group& G) {
    if (point_orbits(G).orbit_count() != 1)
        throw not_transitive("pair_rank needs a transitive point action");
    if (G.degree > 4096)
        throw size_exceeded("pair_rank: v^2 pair scan capped at degree 4096");
    const std::uint64_t v = G.degree;
    pair_rank_report out;
    out.pair_orbits = detail::orbit_partition(v * v, G.gens.size(), [&](std::size_t g, std::uint64_t e) {
        return std::uint64_t(G.gens[g][e / v]) * v + G.gens[g][e % v];
    });
    out.rank = static_cast<std::uint32_t>(out.pair_orbits.orbit_count());
    return out;
}

// Closure of a 3-subset under the generated group, as a canonical design.
inline design orbit_of_block(const perm_group& G, block_t B, std::string provenance = {}) {
    G.validate();
    std::sort(B.begin(), B.end());
    if (B[0] == B[1] || B[1] == B[2] || B[2] >= G.degree)
        throw index_error("orbit_of_block needs a 3-subset of the point set");
    if (provenance.empty()) provenance = "orbit:" + G.label;

    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    std::vector<block_t> blocks{B};
    ids.emplace(detail::pack_block(B), 0);
    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        block_t cur = blocks[stack.back()];
        stack.pop_back();
        for (const auto& g : G.gens) {
            block_t img{g[cur[0]], g[cur[1]], g[cur[2]]};
            std::sort(img.begin(), img.end());
            auto [it, fresh] = ids.emplace(detail::pack_block(img), static_cast<std::uint32_t>(blocks.size()));
            if (fresh) {
                blocks.push_back(img);
                stack.push_back(it->second);
            }
        }
    }
    return design::make(G.degree, std::move(blocks), std::move(provenance));
}

// Orbits on the 3b flags (incident point-block pairs), flag id = 3*block + slot.
// Throws not_automorphism if some generator moves a block off the block set.
inline orbit_report flag_orbits(const perm_group& G, const design& D) {
    G.validate();
    D.validate();
    if (G.degree != D.v) throw domain_error("group degree differs from design point count");

    std::unordered_map<std::uint64_t, std::uint32_t> block_id;
    block_id.reserve(D.blocks.size() * 2);
    for (std::uint32_t i = 0; i < D.blocks.size(); ++i)
        block_id.emplace(detail::pack_block(D.blocks[i]), i);

    std::vector<std::vector<std::uint32_t>> gen_block(G.gens.size());
    for (std::size_t g = 0; g < G.gens.size(); ++g) {
        gen_block[g].resize(D.blocks.size());
        for (std::uint32_t i = 0; i < D.blocks.size(); ++i) {
            block_t img{G.gens[g][D.blocks[i][0]], G.gens[g][D.blocks[i][1]], G.gens[g][D.blocks[i][2]]};
            std::sort(img.begin(), img.end());
            auto it = block_id.find(detail::pack_block(img));
            if (it == block_id.end())
                throw not_automorphism("generator " + std::to_string(g) + " maps block " +
                                       std::to_string(i) + " outside the block set");
            gen_block[g][i] = it->second;
        }
    }

    return detail::orbit_partition(std::uint64_t{3} * D.blocks.size(), G.gens.size(),
                                   [&](std::size_t g, std::uint64_t f) {
                                       std::uint32_t bid = static_cast<std::uint32_t>(f / 3);
                                       pt x = G.gens[g][D.blocks[bid][f % 3]];
                                       std::uint32_t nb = gen_block[g][bid];
                                       const auto& nblk = D.blocks[nb];
                                       std::uint64_t slot = nblk[0] == x ? 0 : nblk[1] == x ? 1 : 2;
                                       return std::uint64_t{3} * nb + slot;
                                   });
}

inline bool is_flag_transitive(const perm_group& G, const design& D) {
    return flag_orbits(G, D).orbit_count() == 1;
}

namespace detail {

using mat = std::vector<std::vector<elem>>;

inline mat identity_mat(const field_table& F, std::uint32_t h) {
    mat m(h, std::vector<elem>(h, F.zero()));
    for (std::uint32_t i = 0; i < h; ++i) m[i][i] = F.one();
    return m;
}

inline std::vector<elem> apply_mat(const field_table& F, const mat& m, const std::vector<elem>& x) {
    std::uint32_t h = static_cast<std::uint32_t>(x.size());
    std::vector<elem> y(h, F.zero());
    for (std::uint32_t i = 0; i < h; ++i)
        for (std::uint32_t j = 0; j < h; ++j)
            if (m[i][j] && x[j]) y[i] = F.add(y[i], F.mul(m[i][j], x[j]));
    return y;
}

// GL_h(q) generator matrices: the elementary transvections x_i += x_j plus,
// for q > 2, the scalar multiplier diag(w, 1, ..., 1).
inline std::vector<mat> gl_generator_mats(const field_table& F, std::uint32_t h) {
    std::vector<mat> out;
    for (std::uint32_t i = 0; i < h; ++i)
        for (std::uint32_t j = 0; j < h; ++j) {
            if (i == j) continue;
            mat t = identity_mat(F, h);
            t[i][j] = F.one();
            out.push_back(std::move(t));
        }
    if (F.size() > 2) {
        mat dg = identity_mat(F, h);
        dg[0][0] = F.omega();
        out.push_back(std::move(dg));
    }
    return out;
}

inline std::vector<std::uint32_t> perm_on_pg(const proj_geometry& g, const mat& m) {
    std::vector<std::uint32_t> perm(g.v());
    for (pt i = 0; i < g.v(); ++i) perm[i] = g.index_of(apply_mat(g.gf, m, g.points[i]));
    return perm;
}

// Packing of GF(q)^h vectors used by the affine families: coordinate 0 most
// significant, so ids enumerate vectors in lexicographic order.
inline std::uint64_t pack_vec(std::uint64_t q, const std::vector<elem>& v) {
    std::uint64_t acc = 0;
    for (elem c : v) acc = acc * q + c;
    return acc;
}

inline std::vector<elem> unpack_vec(std::uint64_t q, std::uint32_t h, std::uint64_t id) {
    std::vector<elem> v(h);
    for (std::uint32_t i = h; i > 0; --i) {
        v[i - 1] = static_cast<elem>(id % q);
        id /= q;
    }
    return v;
}

}  // namespace detail

// PGL_h(q) acting on the canonical point list of PG(h-1,q).
inline perm_group pgl_group(const proj_geometry& g) {
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto& m : detail::gl_generator_mats(g.gf, g.h))
        gens.push_back(detail::perm_on_pg(g, m));
    return perm_group::make(static_cast<std::uint32_t>(g.v()), std::move(gens),
                            "pgl:q=" + std::to_string(g.q) + ",h=" + std::to_string(g.h));
}

// PGammaL_h(q): PGL plus the coordinatewise Frobenius map.
inline perm_group pgammal_group(const proj_geometry& g) {
    auto base = pgl_group(g);
    if (g.gf.d() > 1) {
        std::vector<std::uint32_t> frob(g.v());
        for (pt i = 0; i < g.v(); ++i) {
            std::vector<elem> w(g.h);
            for (std::uint32_t c = 0; c < g.h; ++c) w[c] = g.gf.frobenius(g.points[i][c], 1);
            frob[i] = g.index_of(w);
        }
        base.gens.push_back(std::move(frob));
    }
    base.label = "pgammal:q=" + std::to_string(g.q) + ",h=" + std::to_string(g.h);
    return perm_group::make(base.degree, std::move(base.gens), std::move(base.label));
}

// Translation group of GF(q)^h acting on all q^h packed vectors.
inline perm_group translation_group(std::uint64_t q, std::uint32_t h) {
    auto pp = prime_power_decomp(q);
    if (!pp) throw not_prime_power("q = " + std::to_string(q) + " is not a prime power");
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        space *= q;
        if (space > max_field_size) throw size_exceeded("q^h exceeds the 2^20 cap");
    }
    field_table F = build_field(static_cast<std::uint32_t>(pp->first), pp->second);
    std::vector<std::vector<std::uint32_t>> gens;
    for (std::uint32_t k = 0; k < h; ++k) {
        std::vector<std::uint32_t> perm(space);
        for (std::uint64_t id = 0; id < space; ++id) {
            auto v = detail::unpack_vec(q, h, id);
            v[k] = F.add(v[k], F.one());
            perm[id] = static_cast<std::uint32_t>(detail::pack_vec(q, v));
        }
        gens.push_back(std::move(perm));
    }
    return perm_group::make(static_cast<std::uint32_t>(space), std::move(gens),
                            "transl:q=" + std::to_string(q) + ",h=" + std::to_string(h));
}

// AGL_h(q) = translations plus the GL_h(q) generators.
inline perm_group agl_group(std::uint64_t q, std::uint32_t h) {
    auto base = translation_group(q, h);
    auto pp = prime_power_decomp(q);
    field_table F = build_field(static_cast<std::uint32_t>(pp->first), pp->second);
    const std::uint64_t space = base.degree;
    for (const auto& m : detail::gl_generator_mats(F, h)) {
        std::vector<std::uint32_t> perm(space);
        for (std::uint64_t id = 0; id < space; ++id)
            perm[id] = static_cast<std::uint32_t>(
                detail::pack_vec(q, detail::apply_mat(F, m, detail::unpack_vec(q, h, id))));
        base.gens.push_back(std::move(perm));
    }
    base.label = "agl:q=" + std::to_string(q) + ",h=" + std::to_string(h);
    return perm_group::make(base.degree, std::move(base.gens), std::move(base.label));
}

// One-dimensional affine semilinear group T:G0 on GF(p^d), where T is the
// translation group and G0 = < x -> w^(2m) x, x -> w^e x^(p^s) >. The
// Frobenius exponent is taken mod d with 0 meaning the trivial power (s = d).
// Points are field-element indices.
inline perm_group affine_one_dim_group(std::uint32_t p, std::uint32_t d, std::uint32_t m,
                                       std::uint64_t e, std::uint64_t s) {
    if (m == 0 || m % 2 == 0) throw bad_params("m must be odd");
    if (e % 2 != 0) throw bad_params("e must be even");
    if (std::gcd(std::uint64_t{m}, e) != 1) throw bad_params("gcd(m, e) must be 1");
    if (d < 1) throw domain_error("field degree must be >= 1");
    std::uint64_t s_eff = s % d;
    if (s_eff == 0) s_eff = d;
    if (d % (std::uint64_t{m} * s_eff) != 0) throw bad_params("m*s must divide d");
    for (auto [r, exp] : factorize(m)) {
        (void)exp;
        if (modpow(p, s_eff, r) != 1)
            throw bad_params("every prime divisor of m must divide p^s - 1");
    }

    field_table F = build_field(p, d);
    const std::uint64_t size = F.size(), n = F.order();
    std::vector<std::vector<std::uint32_t>> gens;
    for (std::uint32_t k = 0; k < d; ++k) {
        std::vector<std::uint32_t> t(size);
        elem w_k = F.from_log(k);
        for (std::uint64_t x = 0; x < size; ++x) t[x] = F.add(static_cast<elem>(x), w_k);
        gens.push_back(std::move(t));
    }
    {
        std::vector<std::uint32_t> a(size);
        elem scale = F.from_log((2 * std::uint64_t{m}) % n);
        for (std::uint64_t x = 0; x < size; ++x) a[x] = F.mul(static_cast<elem>(x), scale);
        gens.push_back(std::move(a));
    }
    {
        std::vector<std::uint32_t> b(size);
        elem scale = F.from_log(e % n);
        for (std::uint64_t x = 0; x < size; ++x)
            b[x] = F.mul(scale, F.frobenius(static_cast<elem>(x), s_eff));
        gens.push_back(std::move(b));
    }
    return perm_group::make(static_cast<std::uint32_t>(size), std::move(gens),
                            "affine1d:p=" + std::to_string(p) + ",d=" + std::to_string(d) +
                                ",m=" + std::to_string(m) + ",e=" + std::to_string(e) +
                                ",s=" + std::to_string(s));
}

enum class group_family { pgl_on_pg, pgammal_on_pg, agl_on_v, translations, affine_one_dim };

struct group_params {
    std::uint64_t q = 0;
    std::uint32_t h = 0;
    std::uint32_t p = 0, d = 0, m = 1;
    std::uint64_t e = 2, s = 1;
};

inline perm_group standard_group(group_family family, const group_params& P) {
    switch (family) {
        case group_family::pgl_on_pg:
            return pgl_group(build_pg(P.q, P.h));
        case group_family::pgammal_on_pg:
            return pgammal_group(build_pg(P.q, P.h));
        case group_family::agl_on_v:
            return agl_group(P.q, P.h);
        case group_family::translations:
            return translation_group(P.q, P.h);
        case group_family::affine_one_dim:
            return affine_one_dim_group(P.p, P.d, P.m, P.e, P.s);
    }
    throw domain_error("unknown group family");
}

}  // namespace trides
