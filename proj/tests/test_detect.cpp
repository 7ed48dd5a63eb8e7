#include <doctest.h>

#include <algorithm>
#include <set>

#include "ramsey/detect.hpp"

using namespace ramsey;

namespace {

// independent oracle: enumerate vertex arrangements directly with
// next_permutation over all N-vertex orderings (tiny instances only)
bool naive_has_mono_cycle(const KUniformColoring& c, Color col, int n) {
    int N = c.N(), k = c.k();
    int need = n * (k - 1);
    if (need > N) return false;
    std::vector<int> perm(N);
    for (int i = 0; i < N; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        bool good = true;
        for (int i = 0; i < n && good; ++i) {
            std::vector<int> vs;
            for (int t = 0; t < k; ++t) vs.push_back(perm[(i * (k - 1) + t) % need]);
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            if ((int)vs.size() != k || c.color(vs) != col) good = false;
        }
        if (good) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("find_mono_cycle basics") {
    auto all_red = KUniformColoring::all_red(6, 3);
    auto some = find_mono_cycle(all_red, Color::Red, 3);
    REQUIRE(some.has_value());
    CHECK(validate(some->edges, StructureKind::Cycle).ok);
    CHECK_FALSE(find_mono_cycle(all_red, Color::Blue, 3).has_value());
    auto split = KUniformColoring::split(6, 3, 5);
    CHECK_FALSE(find_mono_cycle(split, Color::Red, 3).has_value());
}

TEST_CASE("find_mono_path basics") {
    auto all_blue = KUniformColoring::all_blue(7, 3);
    auto some = find_mono_path(all_blue, Color::Blue, 3);
    REQUIRE(some.has_value());
    CHECK(validate(some->edges, StructureKind::Path).ok);
    CHECK_FALSE(find_mono_path(all_blue, Color::Red, 1).has_value());
    auto split = KUniformColoring::split(5, 3, 4);
    CHECK_FALSE(find_mono_path(split, Color::Red, 2).has_value());
}

TEST_CASE("detector agrees with the permutation oracle on seeded colorings") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        double p = seed % 3 == 0 ? 0.5 : (seed % 3 == 1 ? 0.2 : 0.8);
        auto c = random_coloring(6, 3, seed, p);
        for (int n : {2, 3}) {
            CHECK(find_mono_cycle(c, Color::Red, n).has_value() ==
                  naive_has_mono_cycle(c, Color::Red, n));
            CHECK(find_mono_cycle(c, Color::Blue, n).has_value() ==
                  naive_has_mono_cycle(c, Color::Blue, n));
        }
    }
    for (uint64_t seed = 0; seed < 8; ++seed) {
        auto c = random_coloring(7, 3, seed + 100, 0.5);
        CHECK(find_mono_cycle(c, Color::Red, 3).has_value() ==
              naive_has_mono_cycle(c, Color::Red, 3));
    }
}

TEST_CASE("every witness validates and is monochromatic") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        auto c = random_coloring(7, 3, seed * 7 + 3, 0.5);
        for (Color col : {Color::Red, Color::Blue}) {
            auto cyc = find_mono_cycle(c, col, 3);
            if (cyc) {
                CHECK(validate(cyc->edges, StructureKind::Cycle).ok);
                for (const Edge& e : cyc->edges) CHECK(c.color(e) == col);
            }
            auto p = find_mono_path(c, col, 3);
            if (p) {
                CHECK(validate(p->edges, StructureKind::Path).ok);
                for (const Edge& e : p->edges) CHECK(c.color(e) == col);
            }
        }
    }
}

TEST_CASE("arrows") {
    auto any16 = random_coloring(4, 3, 9, 0.5);
    CHECK(arrows(any16, 2, 2).holds);
    auto split = KUniformColoring::split(6, 3, 5);
    auto v = arrows(split, 3, 3);
    CHECK_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    auto all_red = KUniformColoring::all_red(6, 3);
    auto w = arrows(all_red, 3, 3);
    CHECK(w.holds);
    CHECK(w.witness->first == Color::Red);
}

TEST_CASE("arrows is monotone toward the witness color") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        auto c = random_coloring(6, 3, seed + 55, 0.5);
        auto v = arrows(c, 2, 2);
        if (!v.holds || v.witness->first != Color::Red) continue;
        // flip one blue edge to red; the red witness must survive
        uint64_t m = binom(6, 3);
        for (uint64_t r = 0; r < m; ++r) {
            Edge e = colex_unrank(r, 6, 3);
            if (c.color(e) == Color::Blue) {
                auto c2 = c.with_forced({e}, Color::Red);
                CHECK(arrows(c2, 2, 2).holds);
                break;
            }
        }
    }
}

TEST_CASE("ramsey_exhaustive small cases") {
    auto r44 = ramsey_exhaustive(3, 2, 2, 4);
    CHECK(r44.all_arrow);
    CHECK(r44.colorings_checked == 16);
    auto r43 = ramsey_exhaustive(3, 2, 2, 3);
    CHECK_FALSE(r43.all_arrow);
    REQUIRE(r43.counterexample.has_value());
    CHECK_THROWS_AS(ramsey_exhaustive(3, 3, 3, 9, 24), BudgetExceeded);
    // monotone in N (spot check at tiny sizes)
    auto r5 = ramsey_exhaustive(3, 2, 2, 5);
    CHECK(r5.all_arrow);
}

TEST_CASE("ramsey_randomized report") {
    CHECK_THROWS_AS(ramsey_randomized(3, 3, 3, 7, 0, 1), InvalidParameters);
    auto rep = ramsey_randomized(3, 3, 3, 7, 200, 7);
    CHECK(rep.trials_run == 200);
    CHECK(rep.failures.empty());  // R(C^3_3,C^3_3) = 7
    auto rep6 = ramsey_randomized(3, 3, 3, 6, 50, 3);
    CHECK(rep6.trials_run == 50);  // failures possible but not required at N=6
    // the split extremal coloring itself does not arrow at N=6
    auto split = KUniformColoring::split(6, 3, 5);
    CHECK_FALSE(arrows(split, 3, 3).holds);
}

TEST_CASE("copy enumeration counts") {
    // pairs of triples sharing exactly two vertices inside 4 points: 6
    auto c2 = cycle_copy_rank_sets(4, 3, 2);
    CHECK(c2.size() == 6);
    // none fit in 3 points
    CHECK(cycle_copy_rank_sets(3, 3, 2).empty());
    // independent oracle: iterate all unordered triples of 3-subsets of
    // {0..5} and keep those matching the loose-cycle intersection pattern
    std::vector<Edge> triples;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
    std::set<std::set<std::vector<int>>> oracle;
    for (size_t x = 0; x < triples.size(); ++x)
        for (size_t y = x + 1; y < triples.size(); ++y)
            for (size_t z = y + 1; z < triples.size(); ++z) {
                auto inter = [&](const Edge& p, const Edge& q) {
                    return set_inter(p, q).size();
                };
                const Edge &A = triples[x], &B = triples[y], &C = triples[z];
                if (inter(A, B) == 1 && inter(B, C) == 1 && inter(A, C) == 1 &&
                    set_union(set_union(A, B), C).size() == 6)
                    oracle.insert({A, B, C});
            }
    auto c3 = cycle_copy_rank_sets(6, 3, 3);
    CHECK(c3.size() == oracle.size());
    std::set<std::vector<uint64_t>> uniq(c3.begin(), c3.end());
    CHECK(uniq.size() == c3.size());
}
