#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "trides/construct.hpp"
#include "trides/io.hpp"

using namespace trides;

TEST_CASE("design text format") {
    auto d = design::make(7, {{0, 1, 3}, {0, 2, 6}}, "demo");
    auto txt = design_to_text(d);
    REQUIRE(txt == "design v=7 k=3\nprovenance=demo\n0 1 3\n0 2 6\n");
    auto back = design_from_text(txt);
    REQUIRE(back.v == d.v);
    REQUIRE(back.blocks == d.blocks);
    REQUIRE(back.provenance == "demo");
    REQUIRE(design_to_text(back) == txt);  // byte-identical rewrite
}

TEST_CASE("design parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            design_from_text(text);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            REQUIRE(e.line == line);
        }
    };
    expect_line("", 1);
    expect_line("design v=7 k=4\n0 1 2\n", 1);
    expect_line("design v=3 k=3\n0 1 2\n", 1);
    expect_line("design v=7 k=3\n0 1\n", 2);
    expect_line("design v=7 k=3\n0 2 1\n", 2);
    expect_line("design v=7 k=3\n0 1 9\n", 2);
    expect_line("design v=7 k=3\n0 1 2\n0 1 2\n", 3);
    expect_line("design v=7 k=3\n0 2 3\n0 1 2\n", 3);  // out of lex order
    expect_line("design v=7 k=3\nprovenance=x\n0 1 x\n", 3);
}

TEST_CASE("group text format") {
    auto g = perm_group::make(3, {{1, 2, 0}, {0, 2, 1}}, "s3");
    auto txt = group_to_text(g);
    REQUIRE(txt == "group degree=3 label=s3\n1 2 0\n0 2 1\n");
    auto back = group_from_text(txt);
    REQUIRE(back.degree == 3);
    REQUIRE(back.gens == g.gens);
    REQUIRE(back.label == "s3");
    REQUIRE(group_to_text(back) == txt);
}

TEST_CASE("group parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            group_from_text(text);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            REQUIRE(e.line == line);
        }
    };
    expect_line("", 1);
    expect_line("group degree=0 label=g\n", 1);
    expect_line("group degree=3 label=g\n0 1\n", 2);
    expect_line("group degree=3 label=g\n0 1 1\n", 2);
    expect_line("group degree=3 label=g\n1 2 0\n0 1 3\n", 3);
    expect_line("group degree=3 label=g\n", 2);  // no generators
}

TEST_CASE("round trip through files") {
    auto [d, pred] = pg_collinear_triples(4, 3);
    auto g = pgammal_group(build_pg(4, 3));
    auto dir = std::string("io_test_tmp");
    write_text_file(dir + ".design", design_to_text(d));
    write_text_file(dir + ".group", group_to_text(g));
    auto d2 = read_design_file(dir + ".design");
    auto g2 = read_group_file(dir + ".group");
    auto p1 = verify_2design(d);
    auto p2 = verify_2design(d2);
    REQUIRE((p1.v == p2.v && p1.b == p2.b && p1.r == p2.r && p1.lambda == p2.lambda));
    REQUIRE(is_flag_transitive(g2, d2));
    REQUIRE(pair_rank(g2).rank == pair_rank(g).rank);
    std::remove((dir + ".design").c_str());
    std::remove((dir + ".group").c_str());
}

TEST_CASE("digest is stable") {
    REQUIRE(fnv1a64("") == 14695981039346656037ull);
    REQUIRE(fnv1a64("a") != fnv1a64("b"));
    auto [d, pred] = pg_collinear_triples(2, 3);
    REQUIRE(fnv1a64(design_to_text(d)) == fnv1a64(design_to_text(d)));
}
