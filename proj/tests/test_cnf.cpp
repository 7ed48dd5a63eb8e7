#include <doctest.h>

#include "ramsey/cnf.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/extremal.hpp"

using namespace ramsey;

TEST_CASE("conjectured_ramsey formula values") {
    CHECK(conjectured_ramsey(3, 3, 3, RamseyShape::PP) == 8);    // 3k - 1
    CHECK(conjectured_ramsey(4, 4, 4, RamseyShape::PP) == 14);   // 4k - 2
    CHECK(conjectured_ramsey(8, 5, 5, RamseyShape::CC) == 37);
    CHECK(conjectured_ramsey(3, 3, 3, RamseyShape::PC) == 8);
    for (int k = 3; k <= 10; ++k) CHECK(conjectured_ramsey(k, 2, 2, RamseyShape::CC) == 2 * k - 2);
    CHECK_THROWS_AS(conjectured_ramsey(3, 2, 3, RamseyShape::CC), InvalidParameters);
}

TEST_CASE("export_cnf counts and determinism") {
    auto inst = export_cnf(3, 2, 2, 4);
    CHECK(inst.var_count == 4);
    CHECK(inst.clauses.size() == 12);  // 6 unordered copies x 2 polarities
    CHECK(inst.red_copies == 6);
    auto inst2 = export_cnf(3, 2, 2, 4);
    CHECK(inst.to_dimacs() == inst2.to_dimacs());
    auto trivial = export_cnf(3, 2, 2, 3);
    CHECK(trivial.var_count == 1);
    CHECK(trivial.clauses.empty());
}

TEST_CASE("split extremal coloring satisfies the (3,3,3,6) instance") {
    auto inst = export_cnf(3, 3, 3, 6);
    CHECK(inst.var_count == 20);
    auto [c, cert] = split_coloring_cycles(3, 3, 3);
    CHECK(satisfies(inst, c));
    // encode it as a model and decode back
    std::string model;
    for (uint64_t r = 0; r < inst.var_count; ++r) {
        Edge e = colex_unrank(r, 6, 3);
        model += (c.color(e) == Color::Red ? "" : "-") + std::to_string(r + 1) + " ";
    }
    model += "0";
    auto dec = decode_model(inst, model);
    CHECK_FALSE(arrows(dec, 3, 3).holds);
    for (uint64_t r = 0; r < inst.var_count; ++r) {
        Edge e = colex_unrank(r, 6, 3);
        CHECK(dec.color(e) == c.color(e));
    }
}

TEST_CASE("all-positive model for (3,2,2,4) violates a negative clause") {
    auto inst = export_cnf(3, 2, 2, 4);
    CHECK_THROWS_AS(decode_model(inst, "1 2 3 4 0"), InvalidModel);
    CHECK_THROWS_AS(decode_model(inst, "1 2 3 0"), InvalidModel);  // unassigned var
}

TEST_CASE("clause semantics match the arrows oracle") {
    auto inst6 = export_cnf(3, 3, 3, 6);
    for (uint64_t seed = 0; seed < 120; ++seed) {
        auto c = random_coloring(6, 3, seed * 31 + 1, (seed % 2) ? 0.5 : 0.3);
        CHECK(satisfies(inst6, c) == !arrows(c, 3, 3).holds);
    }
    auto inst4 = export_cnf(3, 2, 2, 4);
    for (uint64_t x = 0; x < 16; ++x) {
        std::vector<uint8_t> bits(1, (uint8_t)x);
        auto c = KUniformColoring::bitmap(4, 3, bits);
        CHECK(satisfies(inst4, c) == !arrows(c, 2, 2).holds);
    }
}
