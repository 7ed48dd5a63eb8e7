#include <doctest.h>

#include "ramsey/cnf.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/extremal.hpp"

using namespace ramsey;

TEST_CASE("split_coloring_cycles shapes") {
    auto [c333, cert333] = split_coloring_cycles(3, 3, 3);
    CHECK(c333.N() == 6);
    CHECK(cert333.a == 5);
    CHECK(cert333.b == 1);
    auto [c833, cert833] = split_coloring_cycles(8, 3, 3);
    CHECK(c833.N() == 21);
    CHECK(cert833.a == 20);
    CHECK(cert833.b == 1);
    auto [c322, cert322] = split_coloring_cycles(3, 2, 2);
    CHECK(c322.N() == 3);
    CHECK(check_certificate(c322, cert322).valid);
}

TEST_CASE("split_coloring_paths shapes") {
    auto [p333, cert] = split_coloring_paths(3, 3, 3);
    CHECK(p333.N() == 7);  // = R(P^3_3, P^3_3) - 1 = 3k - 2
    CHECK(p333.N() == conjectured_ramsey(3, 3, 3, RamseyShape::PP) - 1);
    auto [p311, cert311] = split_coloring_paths(3, 1, 1);
    CHECK(p311.N() == 2);
    CHECK(check_certificate(p311, cert311).valid);
    auto [p444, cert444] = split_coloring_paths(4, 4, 4);
    CHECK(p444.N() == 13);  // 4k - 2 - 1
    CHECK(p444.N() == conjectured_ramsey(4, 4, 4, RamseyShape::PP) - 1);
    CHECK(check_certificate(p444, cert444).valid);
    (void)cert;
}

TEST_CASE("check_certificate accepts constructions and flags violations") {
    auto [c, cert] = split_coloring_cycles(8, 3, 3);
    CHECK(check_certificate(c, cert).valid);
    // flip one A-internal edge to blue: condition (b) breaks
    auto bits = c.materialize_bits(1u << 20);
    Edge inside_a = {0, 1, 2, 3, 4, 5, 6, 7};
    uint64_t r = colex_rank(inside_a, cert.N, cert.k);
    bits[r >> 3] ^= (uint8_t)(1u << (r & 7));
    auto flipped = KUniformColoring::bitmap(cert.N, cert.k, bits);
    auto chk = check_certificate(flipped, cert);
    CHECK_FALSE(chk.valid);
    CHECK(chk.violation.substr(0, 3) == "(b)");
    // oversized B: condition (c) breaks
    SplitCertificate bad = cert;
    bad.b = (bad.m + 1) / 2;  // ceil(m/2)
    bad.a = bad.N - bad.b;
    CHECK_FALSE(check_certificate(c, bad).valid);
}

TEST_CASE("certificates agree with the detector where feasible") {
    for (auto [k, n, m] : std::vector<std::array<int, 3>>{{3, 2, 2}, {3, 3, 2}, {3, 3, 3},
                                                          {3, 4, 2}, {3, 4, 3}, {3, 4, 4},
                                                          {4, 2, 2}, {4, 3, 2}, {4, 3, 3}}) {
        auto [c, cert] = split_coloring_cycles(k, n, m);
        CHECK(check_certificate(c, cert).valid);
        if (c.N() >= c.k()) {
            auto v = arrows(c, n, m);
            CHECK_FALSE(v.holds);
        }
        CHECK(c.N() == conjectured_ramsey(k, n, m, RamseyShape::CC) - 1);
    }
}
