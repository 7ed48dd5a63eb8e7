#include <doctest.h>

#include "ramsey/core.hpp"

using namespace ramsey;

TEST_CASE("colex rank examples") {
    CHECK(colex_rank({0, 1, 2}, 6, 3) == 0);
    // enumeration oracle: sort all 3-subsets of {0..5} by colex comparison
    // (largest differing element) and index them
    std::vector<Edge> all;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) all.push_back({a, b, c});
    std::sort(all.begin(), all.end(), [](const Edge& x, const Edge& y) {
        for (int i = 2; i >= 0; --i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    });
    for (size_t i = 0; i < all.size(); ++i) CHECK(colex_rank(all[i], 6, 3) == i);
    CHECK(colex_rank({1, 2, 3}, 6, 3) == 3);
    CHECK(colex_unrank(3, 6, 3) == Edge{1, 2, 3});
    CHECK(colex_unrank(0, 6, 3) == Edge{0, 1, 2});
    CHECK(colex_unrank(binom(6, 3) - 1, 6, 3) == Edge{3, 4, 5});
    CHECK_THROWS_AS(colex_unrank(binom(6, 3), 6, 3), RankOutOfRange);
    CHECK_THROWS_AS(colex_rank({2, 1, 0}, 6, 3), InvalidEdge);
}

TEST_CASE("colex roundtrip exhaustive N<=10 k<=5") {
    for (int N = 1; N <= 10; ++N)
        for (int k = 1; k <= 5 && k <= N; ++k)
            for (uint64_t r = 0; r < binom(N, k); ++r)
                CHECK(colex_rank(colex_unrank(r, N, k), N, k) == r);
}

TEST_CASE("canonical structures match the defining formulas") {
    auto c23 = canonical_loose_cycle(2, 3);
    REQUIRE(c23.edges.size() == 2);
    CHECK(c23.edges[0] == Edge{0, 1, 2});
    CHECK(c23.edges[1] == Edge{0, 2, 3});
    auto c33 = canonical_loose_cycle(3, 3);
    CHECK(c33.edges[0] == Edge{0, 1, 2});
    CHECK(c33.edges[1] == Edge{2, 3, 4});
    CHECK(c33.edges[2] == Edge{0, 4, 5});
    auto c24 = canonical_loose_cycle(2, 4);
    CHECK(c24.edges[0] == Edge{0, 1, 2, 3});
    CHECK(c24.edges[1] == Edge{0, 3, 4, 5});
    auto p13 = canonical_loose_path(1, 3);
    CHECK(p13.edges[0] == Edge{0, 1, 2});
    auto p23 = canonical_loose_path(2, 3);
    CHECK(p23.edges[1] == Edge{2, 3, 4});
    auto p34 = canonical_loose_path(3, 4);
    CHECK(p34.edges[2] == Edge{6, 7, 8, 9});
    CHECK_THROWS_AS(canonical_loose_cycle(1, 3), InvalidParameters);
    CHECK_THROWS_AS(canonical_loose_cycle(2, 2), InvalidParameters);
}

TEST_CASE("endpoints") {
    auto c33 = canonical_loose_cycle(3, 3);
    CHECK(c33.first_of(0) == 0);
    CHECK(c33.last_of(0) == 2);
    CHECK(c33.first_of(2) == 4);
    CHECK(c33.last_of(2) == 0);  // wraparound
    auto p23 = canonical_loose_path(2, 3);
    CHECK(p23.first_of(1) == 2);
    CHECK(p23.last_of(1) == 4);
    CHECK_THROWS_AS(c33.first_of(3), IndexError);
}

TEST_CASE("validate accepts canonical structures and rejects bad ones") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 3; k <= 6; ++k) {
            auto c = canonical_loose_cycle(n, k);
            auto r = validate(c.edges, StructureKind::Cycle);
            CHECK(r.ok);
            CHECK((int)r.cycle->vertex_order.size() == n * (k - 1));
        }
    for (int n = 1; n <= 4; ++n)
        for (int k = 2; k <= 5; ++k) {
            auto p = canonical_loose_path(n, k);
            auto r = validate(p.edges, StructureKind::Path);
            CHECK(r.ok);
            CHECK((int)r.path->vertex_order.size() == n * (k - 1) + 1);
        }
    // the two-edge pair sharing two vertices is a valid C^3_2 up to relabeling
    auto ok2 = validate({{0, 1, 2}, {1, 2, 3}}, StructureKind::Cycle);
    CHECK(ok2.ok);
    // cyclic closure failure
    auto bad = validate({{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}, StructureKind::Cycle);
    CHECK_FALSE(bad.ok);
    // consecutive path edges must share exactly one vertex
    auto bad2 = validate({{0, 1, 2}, {3, 4, 5}}, StructureKind::Path);
    CHECK_FALSE(bad2.ok);
}

TEST_CASE("validate is rotation/reflection invariant and normalization idempotent") {
    auto c = canonical_loose_cycle(4, 4);
    std::vector<Edge> edges = c.edges;
    for (int rot = 0; rot < 4; ++rot) {
        std::rotate(edges.begin(), edges.begin() + 1, edges.end());
        auto r = validate(edges, StructureKind::Cycle);
        REQUIRE(r.ok);
        CHECK(r.cycle->vertex_order == c.vertex_order);
    }
    std::vector<Edge> rev(edges.rbegin(), edges.rend());
    auto r = validate(rev, StructureKind::Cycle);
    REQUIRE(r.ok);
    CHECK(r.cycle->vertex_order == c.vertex_order);
    CHECK(normalize(*r.cycle).vertex_order == r.cycle->vertex_order);
}

TEST_CASE("colorings: rules, determinism, lrc roundtrip") {
    auto all_red = KUniformColoring::all_red(4, 3);
    CHECK(all_red.color({0, 1, 2}) == Color::Red);
    CHECK(all_red.color({1, 2, 3}) == Color::Red);
    auto split = KUniformColoring::split(6, 3, 5);
    CHECK(split.color({0, 1, 2}) == Color::Red);
    CHECK(split.color({0, 1, 5}) == Color::Blue);
    auto r1 = random_coloring(6, 3, 1, 0.5);
    auto r2 = random_coloring(6, 3, 1, 0.5);
    CHECK(r1.materialize_bits() == r2.materialize_bits());
    CHECK(r1.to_lrc() == r2.to_lrc());
    auto back = KUniformColoring::from_lrc(r1.to_lrc());
    CHECK(back.materialize_bits() == r1.materialize_bits());
    auto split_rt = KUniformColoring::from_lrc(split.to_lrc());
    CHECK(split_rt.mode() == KUniformColoring::Mode::Split);
    CHECK(split_rt.split_a() == 5);
    auto hash = KUniformColoring::hash_rule(7, 3, 42, 300000, 1000000);
    auto hash_rt = KUniformColoring::from_lrc(hash.to_lrc());
    CHECK(hash_rt.materialize_bits() == hash.materialize_bits());
    // overlay
    auto forced = all_red.with_forced({{0, 1, 2}}, Color::Blue);
    CHECK(forced.color({0, 1, 2}) == Color::Blue);
    CHECK(forced.color({0, 1, 3}) == Color::Red);
}
