#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "trides/classify.hpp"
#include "trides/construct.hpp"
#include "trides/perm.hpp"

using namespace trides;

namespace {

perm_group cyclic_group(std::uint32_t n) {
    std::vector<std::uint32_t> shift(n);
    for (std::uint32_t i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    return perm_group::make(n, {shift}, "z" + std::to_string(n));
}

perm_group identity_group(std::uint32_t n) {
    std::vector<std::uint32_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    return perm_group::make(n, {id}, "id");
}

design cyclic_sts7() {
    std::vector<block_t> blocks;
    for (pt i = 0; i < 7; ++i)
        blocks.push_back({i, static_cast<pt>((i + 1) % 7), static_cast<pt>((i + 3) % 7)});
    return design::make(7, std::move(blocks), "sts7");
}

}  // namespace

TEST_CASE("group validation") {
    REQUIRE_THROWS_AS(perm_group::make(3, {{0, 0, 1}}), domain_error);
    REQUIRE_THROWS_AS(perm_group::make(3, {{0, 1}}), domain_error);
    REQUIRE_THROWS_AS(perm_group::make(3, {}), domain_error);
    REQUIRE_THROWS_AS(perm_group::make(3, {{0, 1, 3}}), domain_error);
}

TEST_CASE("point orbits") {
    REQUIRE(point_orbits(identity_group(7)).orbit_count() == 7);
    auto rep = point_orbits(cyclic_group(7));
    REQUIRE(rep.orbit_count() == 1);
    REQUIRE(rep.sizes == std::vector<std::uint64_t>{7});

    auto tr = translation_group(3, 2);
    auto trep = point_orbits(tr);
    REQUIRE(trep.orbit_count() == 1);
    REQUIRE(trep.sizes == std::vector<std::uint64_t>{9});
}

TEST_CASE("pair rank") {
    auto fano = build_pg(2, 3);
    REQUIRE(pair_rank(pgl_group(fano)).rank == 2);

    auto cyc = pair_rank(cyclic_group(7));
    REQUIRE(cyc.rank == 7);  // the 7 difference classes of a regular cyclic action

    auto netto_group = affine_one_dim_group(19, 1, 1, 2, 1);
    auto pr = pair_rank(netto_group);
    REQUIRE(pr.rank == 3);
    REQUIRE(pr.nondiagonal_sizes() == std::vector<std::uint64_t>{171, 171});
    REQUIRE(pr.pair_orbits.sizes[0] == 19);  // diagonal

    REQUIRE_THROWS_AS(pair_rank(identity_group(5)), not_transitive);
}

TEST_CASE("orbit of a block") {
    auto fano = build_pg(2, 3);
    auto g = pgl_group(fano);
    const auto& ln = fano.lines[0];
    auto orbit = orbit_of_block(g, {ln[0], ln[1], ln[2]});
    REQUIRE(orbit.blocks.size() == 7);
    std::vector<block_t> lines;
    for (const auto& l : fano.lines) lines.push_back({l[0], l[1], l[2]});
    std::sort(lines.begin(), lines.end());
    REQUIRE(orbit.blocks == lines);

    auto single = orbit_of_block(identity_group(7), {0, 1, 2});
    REQUIRE(single.blocks.size() == 1);

    // {0, 1, w} in GF(7) under T:<squares> closes to the unique STS(7)
    auto g7 = affine_one_dim_group(7, 1, 1, 2, 1);
    auto F = build_field(7, 1);
    auto sts = orbit_of_block(g7, {0, F.one(), F.omega()});
    auto p = verify_2design(sts);
    REQUIRE(p.is_2design);
    REQUIRE(p.b == 7);
    REQUIRE(p.lambda == 1);

    REQUIRE_THROWS_AS(orbit_of_block(g7, {0, 0, 2}), index_error);
    REQUIRE_THROWS_AS(orbit_of_block(g7, {0, 1, 7}), index_error);
}

TEST_CASE("flag transitivity") {
    auto fano = build_pg(2, 3);
    auto [d1, pred] = pg_collinear_triples(2, 3);
    REQUIRE(is_flag_transitive(pgl_group(fano), d1));

    // the cyclic presentation admits only the Singer shift: 3 flag orbits of size 7
    auto sts = cyclic_sts7();
    auto fo = flag_orbits(cyclic_group(7), sts);
    REQUIRE(fo.orbit_count() == 3);
    REQUIRE(fo.sorted_sizes() == std::vector<std::uint64_t>{7, 7, 7});
    REQUIRE_FALSE(is_flag_transitive(cyclic_group(7), sts));

    // translations alone fix the parallel classes of AG(2,3)
    auto [ag, agp] = ag3_lines(2);
    auto tr = translation_group(3, 2);
    auto fo2 = flag_orbits(tr, ag);
    REQUIRE(fo2.orbit_count() == 4);
    REQUIRE(fo2.sorted_sizes() == std::vector<std::uint64_t>{9, 9, 9, 9});

    // a group that moves blocks off the block set is a caller bug
    std::vector<std::uint32_t> swap01{1, 0, 2, 3, 4, 5, 6};
    auto bad = perm_group::make(7, {swap01}, "swap");
    REQUIRE_THROWS_AS(flag_orbits(bad, sts), not_automorphism);

    REQUIRE_THROWS_AS(flag_orbits(cyclic_group(9), sts), domain_error);  // degree mismatch
}

TEST_CASE("standard groups act as expected") {
    auto g = standard_group(group_family::pgl_on_pg, {.q = 2, .h = 3});
    REQUIRE(g.degree == 7);
    REQUIRE(pair_rank(g).rank == 2);

    // PGL / PGammaL are point-2-transitive across the sample box (q^h <= 10^4)
    for (auto [q, h] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 3}, {2, 4}, {3, 3}, {4, 3}, {5, 3}, {8, 2}, {9, 2}, {2, 5}, {7, 3}, {3, 5},
             {4, 4}, {2, 9}}) {
        REQUIRE(pair_rank(standard_group(group_family::pgl_on_pg, {.q = q, .h = h})).rank == 2);
        REQUIRE(pair_rank(standard_group(group_family::pgammal_on_pg, {.q = q, .h = h})).rank == 2);
    }

    REQUIRE(point_orbits(standard_group(group_family::agl_on_v, {.q = 3, .h = 3})).orbit_count() == 1);
    REQUIRE(standard_group(group_family::translations, {.q = 3, .h = 2}).degree == 9);
}

TEST_CASE("one-dimensional affine groups") {
    // stabilizer of 0 = the non-translation generators; orbits {0} + squares + non-squares
    auto F = build_field(7, 1);
    auto g0_gens = affine_one_dim_group(7, 1, 1, 2, 1);
    perm_group stab = perm_group::make(7, {g0_gens.gens[1], g0_gens.gens[2]}, "g0");
    auto rep = point_orbits(stab);
    REQUIRE(rep.sorted_sizes() == std::vector<std::uint64_t>{1, 3, 3});
    REQUIRE(F.is_square(static_cast<elem>(rep.reps[1])) != F.is_square(static_cast<elem>(rep.reps[2])));

    // e even implies both generators preserve squareness; with m = 1 the two
    // nonzero orbits are exactly the squares and the non-squares
    for (auto [p, d] : {std::pair{7u, 1u}, {19u, 1u}, {3u, 3u}}) {
        auto G = affine_one_dim_group(p, d, 1, 2, 1);
        auto Fd = build_field(p, d);
        perm_group g0 = perm_group::make(G.degree, {G.gens[d], G.gens[d + 1]}, "g0");
        auto orb = point_orbits(g0);
        REQUIRE(orb.orbit_count() == 3);
        std::vector<char> orbit_of(G.degree, -1);
        // recover orbit membership by BFS from each representative
        for (std::size_t k = 0; k < orb.reps.size(); ++k) {
            std::vector<std::uint64_t> stack{orb.reps[k]};
            while (!stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                if (orbit_of[x] != -1) continue;
                orbit_of[x] = static_cast<char>(k);
                for (const auto& gen : g0.gens) stack.push_back(gen[x]);
            }
        }
        for (elem x = 1; x < G.degree; ++x)
            for (elem y = x + 1; y < G.degree; ++y)
                if (orbit_of[x] == orbit_of[y])
                    REQUIRE(Fd.is_square(x) == Fd.is_square(y));
    }

    // construction succeeds for p = 13 even though the case-1 congruence fails:
    // construction and admissibility are separate concerns
    auto g13 = affine_one_dim_group(13, 1, 1, 2, 1);
    REQUIRE(g13.degree == 13);
    REQUIRE(point_orbits(g13).orbit_count() == 1);
    REQUIRE_FALSE(check_case1_conditions(13, 1, 1, 2, 1).ok);

    // parameter validation
    REQUIRE_THROWS_AS(affine_one_dim_group(7, 1, 2, 2, 1), bad_params);   // m even
    REQUIRE_THROWS_AS(affine_one_dim_group(7, 1, 1, 3, 1), bad_params);   // e odd
    REQUIRE_THROWS_AS(affine_one_dim_group(7, 2, 3, 6, 1), bad_params);   // gcd(m,e) = 3
    REQUIRE_THROWS_AS(affine_one_dim_group(7, 2, 3, 2, 1), bad_params);   // ms does not divide d
    REQUIRE_THROWS_AS(affine_one_dim_group(5, 3, 3, 2, 1), bad_params);   // 3 does not divide 5-1
    REQUIRE_THROWS_AS(affine_one_dim_group(9, 1, 1, 2, 1), composite_p);

    // s = 0 acts as the trivial Frobenius power
    auto gs0 = affine_one_dim_group(7, 1, 1, 0, 0);
    REQUIRE(point_orbits(perm_group::make(7, {gs0.gens[1], gs0.gens[2]}, "g0")).sorted_sizes() ==
            std::vector<std::uint64_t>{1, 3, 3});
}

TEST_CASE("orbit closure is independent of generator order") {
    auto g = pgl_group(build_pg(4, 3));
    auto base = point_orbits(g);
    auto pr_base = pair_rank(g);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        auto gens = g.gens;
        std::shuffle(gens.begin(), gens.end(), rng);
        auto shuffled = perm_group::make(g.degree, std::move(gens), g.label);
        auto rep = point_orbits(shuffled);
        REQUIRE(rep.reps == base.reps);
        REQUIRE(rep.sizes == base.sizes);
        auto pr = pair_rank(shuffled);
        REQUIRE(pr.rank == pr_base.rank);
        REQUIRE(pr.pair_orbits.reps == pr_base.pair_orbits.reps);
        REQUIRE(pr.pair_orbits.sizes == pr_base.pair_orbits.sizes);
    }
}

TEST_CASE("orbit report sizes sum to the domain") {
    auto g = agl_group(3, 2);
    auto rep = point_orbits(g);
    std::uint64_t total = 0;
    for (auto s : rep.sizes) total += s;
    REQUIRE(total == rep.domain_size);
}
