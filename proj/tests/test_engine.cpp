#include <doctest.h>

#include "ramsey/detect.hpp"
#include "ramsey/trials.hpp"

using namespace ramsey;

namespace {

// configuration whose only blue edges are the two cycles
TrialSetup red_world(int k, int l1, int l2, int N) {
    LooseCycle C1 = canonical_loose_cycle(l1, k);
    LooseCycle canon2 = canonical_loose_cycle(l2, k);
    std::vector<Edge> e2;
    for (const Edge& e : canon2.edges) {
        Edge shifted;
        for (Vertex v : e) shifted.push_back(v + l1 * (k - 1));
        e2.push_back(sorted(shifted));
    }
    LooseCycle C2 = *validate(e2, StructureKind::Cycle).cycle;
    auto base = KUniformColoring::all_red(N, k);
    std::vector<Edge> blues = C1.edges;
    blues.insert(blues.end(), C2.edges.begin(), C2.edges.end());
    return {base.with_forced(blues, Color::Blue), C1, C2};
}

TrialSetup blue_world(int k, int l1, int l2, int N) {
    TrialSetup s = red_world(k, l1, l2, N);
    return {KUniformColoring::all_blue(N, k), s.C1, s.C2};
}

}  // namespace

TEST_CASE("find_mono_c2: monochromatic and near-monochromatic") {
    auto all_red = KUniformColoring::all_red(4, 3);
    auto [c1, w1] = find_mono_c2(all_red);
    CHECK(c1 == Color::Red);
    CHECK(validate(w1.edges, StructureKind::Cycle).ok);
    // exactly {0,1,2} red: any two blue triples in 4 vertices share 2 vertices
    auto nearly = KUniformColoring::all_blue(4, 3).with_forced({{0, 1, 2}}, Color::Red);
    auto [c2, w2] = find_mono_c2(nearly);
    CHECK(c2 == Color::Blue);
    CHECK(validate(w2.edges, StructureKind::Cycle).ok);
    for (const Edge& e : w2.edges) CHECK(nearly.color(e) == Color::Blue);
    CHECK_THROWS_AS(find_mono_c2(KUniformColoring::all_red(3, 3)), TooFewVertices);
}

TEST_CASE("find_mono_c2: exhaustive over all colorings of K^3_4") {
    uint64_t m = binom(4, 3);
    for (uint64_t x = 0; x < (1ull << m); ++x) {
        std::vector<uint8_t> bits(1, (uint8_t)x);
        auto c = KUniformColoring::bitmap(4, 3, bits);
        auto [col, cyc] = find_mono_c2(c);
        CHECK(validate(cyc.edges, StructureKind::Cycle).ok);
        for (const Edge& e : cyc.edges) CHECK(c.color(e) == col);
    }
}

TEST_CASE("step_down_1: branches and validation") {
    // all-red: first probe wins, red C_{n-1}
    auto all_red6 = KUniformColoring::all_red(18, 6);
    auto C = canonical_loose_cycle(3, 6);
    auto out = step_down_1(all_red6, C);
    CHECK(out.kind == Outcome::Kind::RedCycle);
    CHECK(out.red_cycle->n() == 2);
    // planted red cycle, everything else blue: all probes blue
    auto planted = KUniformColoring::all_blue(18, 6).with_forced(C.edges, Color::Red);
    auto out2 = step_down_1(planted, C);
    CHECK(out2.kind == Outcome::Kind::BlueCycle);
    CHECK(out2.blue_cycle->n() == 3);
    for (const Edge& e : out2.blue_cycle->edges) CHECK(planted.color(e) == Color::Blue);
    // even n
    auto C4 = canonical_loose_cycle(4, 6);
    auto all_red24 = KUniformColoring::all_red(24, 6);
    auto out3 = step_down_1(all_red24, C4);
    CHECK(out3.kind == Outcome::Kind::RedCycle);
    CHECK(out3.red_cycle->n() == 3);
    auto planted4 = KUniformColoring::all_blue(24, 6).with_forced(C4.edges, Color::Red);
    auto out4 = step_down_1(planted4, C4);
    CHECK(out4.kind == Outcome::Kind::BlueCycle);
    CHECK(out4.blue_cycle->n() == 4);
}

TEST_CASE("step_down_1 randomized trials (k=6, n=4)") {
    auto rep = run_lemma_trials("step_down_1", 6, 4, 0, 0, 120, 11, 0.5);
    INFO((rep.errors.empty() ? std::string() : rep.errors[0]));
    CHECK(rep.ok());
    CHECK(rep.trials == 120);
}

TEST_CASE("step_down_2: branches") {
    auto all_red = KUniformColoring::all_red(30, 6);
    auto C5 = canonical_loose_cycle(5, 6);
    auto out = step_down_2(all_red, C5);
    CHECK(out.kind == Outcome::Kind::RedCycle);
    CHECK(out.red_cycle->n() == 3);
    auto planted6 = KUniformColoring::all_blue(36, 6)
                        .with_forced(canonical_loose_cycle(6, 6).edges, Color::Red);
    auto out2 = step_down_2(planted6, canonical_loose_cycle(6, 6));
    CHECK(out2.kind == Outcome::Kind::BlueCycle);
    CHECK(out2.blue_cycle->n() == 6);
    auto rep = run_lemma_trials("step_down_2", 8, 6, 0, 0, 60, 5, 0.5);
    INFO((rep.errors.empty() ? std::string() : rep.errors[0]));
    CHECK(rep.ok());
}

TEST_CASE("red_pair_path: forced branches at k=8") {
    int k = 8;
    int N = (k - 1) * 5 + 2;
    // all non-cycle edges red: the favorable pair is red
    auto rw = red_world(k, 2, 3, N);
    auto cfg = trial_cfg(rw);
    P2Hypothesis hyp;
    hyp.i = 0;
    hyp.j = 0;
    hyp.C = cfg.e_interior(0)[k - 4];
    hyp.w1 = cfg.W[0];
    hyp.w2 = cfg.W[1];
    hyp.vprev = cfg.C1.at(1);
    hyp.vnext = cfg.C1.at(k);
    hyp.uprev = cfg.C2.at(1);
    hyp.unext = cfg.C2.at(k);
    hyp.leftover_side = 1;
    auto out = red_pair_path(cfg, hyp);
    CHECK(out.kind == Outcome::Kind::RedPath);
    CHECK(check_p2_conditions(cfg, hyp, *out.red_path).empty());
    // all blue: the blue witness is forced
    auto bw = blue_world(k, 2, 3, N);
    auto cfgb = trial_cfg(bw);
    auto outb = red_pair_path(cfgb, hyp);
    CHECK(outb.kind == Outcome::Kind::BlueCycle);
    CHECK(outb.blue_cycle->n() == 5);
    for (const Edge& e : outb.blue_cycle->edges) CHECK(cfgb.coloring.color(e) == Color::Blue);
}

TEST_CASE("red_pair_path randomized trials") {
    for (double p : {0.1, 0.5, 0.9}) {
        auto rep = run_lemma_trials("red_pair_path", 8, 0, 2, 2, 60, 21 + (int)(p * 10), p);
        INFO("p=", p, " err=", (rep.errors.empty() ? std::string() : rep.errors[0]));
        CHECK(rep.ok());
    }
}

TEST_CASE("red_pair_path_strong: forced branches and trials") {
    int k = 8, N = (k - 1) * 5 + 2;
    auto rw = red_world(k, 2, 3, N);
    auto cfg = trial_cfg(rw);
    auto out = red_pair_path_strong(cfg, 0, 0, cfg.C1.at(1), cfg.C1.at(k), cfg.C2.at(1),
                                    cfg.C2.at(k));
    CHECK(out.kind == Outcome::Kind::RedPath);
    CHECK(check_p2_strong_conditions(cfg, 0, 0, cfg.C1.at(1), cfg.C1.at(k), cfg.C2.at(1),
                                     cfg.C2.at(k), *out.red_path)
              .empty());
    auto bw = blue_world(k, 2, 3, N);
    auto cfgb = trial_cfg(bw);
    auto outb = red_pair_path_strong(cfgb, 0, 0, cfgb.C1.at(1), cfgb.C1.at(k), cfgb.C2.at(1),
                                     cfgb.C2.at(k));
    CHECK(outb.kind == Outcome::Kind::BlueCycle);
    auto rep = run_lemma_trials("red_pair_path_strong", 8, 0, 2, 3, 60, 33, 0.5);
    INFO((rep.errors.empty() ? std::string() : rep.errors[0]));
    CHECK(rep.ok());
}

TEST_CASE("branch_paths: forced branches and trials") {
    int k = 8, N = (k - 1) * 5 + 3;
    auto rw = red_world(k, 2, 3, N);
    auto cfg = trial_cfg(rw);
    std::vector<Vertex> B = {cfg.W[0], cfg.W[1], cfg.W[2]};
    auto out = branch_paths(cfg, 0, 0, B);
    REQUIRE(out.pair.has_value());
    CHECK(check_branch_conditions(cfg, 0, 0, B, *out.pair).empty());
    auto bw = blue_world(k, 2, 3, N);
    auto cfgb = trial_cfg(bw);
    auto outb = branch_paths(cfgb, 0, 0, B);
    REQUIRE(outb.blue_cycle.has_value());
    CHECK(outb.blue_cycle->n() == 5);
    auto rep = run_lemma_trials("branch_paths", 8, 0, 2, 3, 60, 44, 0.5);
    INFO((rep.errors.empty() ? std::string() : rep.errors[0]));
    CHECK(rep.ok());
}

TEST_CASE("ladder: initial then steps then final on an all-red world") {
    int k = 8, l1 = 5, l2 = 5, N = (k - 1) * 10 + 4;
    auto rw = red_world(k, l1, l2, N);
    auto cfg = trial_cfg(rw);
    std::vector<Vertex> B = {cfg.W[0], cfg.W[1], cfg.W[2]};
    auto bo = branch_paths(cfg, 0, 0, B);
    REQUIRE(bo.pair.has_value());
    auto lo = ladder_initial(cfg, 0, 0, *bo.pair);
    REQUIRE(lo.state.has_value());
    CHECK(check_ladder_state(cfg, *lo.state).empty());
    auto so = ladder_step(cfg, *lo.state);
    REQUIRE(so.state.has_value());
    CHECK(so.state->t == 3);
    CHECK(check_ladder_state(cfg, *so.state).empty());
    // final hook with fresh vertices from e_{t+1}, f_{t+1}
    auto st = *so.state;
    Edge used;
    for (const Edge& e : st.Epath()) used = set_union(used, e);
    for (const Edge& e : st.Fpath()) used = set_union(used, e);
    Edge vpool = set_minus(set_minus(cfg.e(st.i0 + st.t + 1), Edge{cfg.e_last(st.i0 + st.t + 1)}),
                           used);
    Edge upool = set_minus(set_minus(cfg.f(st.j0 + st.t + 1), Edge{cfg.f_last(st.j0 + st.t + 1)}),
                           used);
    REQUIRE_FALSE(vpool.empty());
    REQUIRE_FALSE(upool.empty());
    auto fo = ladder_final(cfg, st, vpool[0], upool[0]);
    REQUIRE(fo.final_path.has_value());
    CHECK(fo.final_path->n() == 2 * (st.t + 1));
    for (const Edge& e : fo.final_path->edges) CHECK(cfg.coloring.color(e) == Color::Red);
}

TEST_CASE("ladder: all-blue world forces the blue witness at every stage") {
    int k = 8, l1 = 3, l2 = 3, N = (k - 1) * 6 + 3;
    auto bw = blue_world(k, l1, l2, N);
    auto cfg = trial_cfg(bw);
    std::vector<Vertex> B = {cfg.W[0], cfg.W[1], cfg.W[2]};
    auto bo = branch_paths(cfg, 0, 0, B);
    REQUIRE(bo.blue_cycle.has_value());
    CHECK(bo.blue_cycle->n() == 6);
}

TEST_CASE("ladder randomized trials") {
    auto rep = run_lemma_trials("ladder_extend", 8, 0, 5, 5, 30, 77, 0.5);
    INFO((rep.errors.empty() ? std::string() : rep.errors[0]));
    CHECK(rep.ok());
}

TEST_CASE("half_cycle_odd n=5: branches") {
    int k = 8, n = 5;
    int N = (k - 1) * n + (n - 1) / 2;
    auto rw = red_world(k, 2, 3, N);
    auto out = half_cycle_odd(rw.coloring, rw.C1, rw.C2);
    CHECK(out.kind == Outcome::Kind::RedCycle);
    CHECK(out.red_cycle->n() == 3);
    auto bw = blue_world(k, 2, 3, N);
    auto outb = half_cycle_odd(bw.coloring, bw.C1, bw.C2);
    CHECK(outb.kind == Outcome::Kind::BlueCycle);
    CHECK(outb.blue_cycle->n() == 5);
}

TEST_CASE("half_cycle_odd n=7 and trials") {
    int k = 8, n = 7;
    int N = (k - 1) * n + (n - 1) / 2;
    auto rw = red_world(k, 3, 4, N);
    auto out = half_cycle_odd(rw.coloring, rw.C1, rw.C2);
    CHECK(out.kind == Outcome::Kind::RedCycle);
    CHECK(out.red_cycle->n() == 4);
    auto bw = blue_world(k, 3, 4, N);
    auto outb = half_cycle_odd(bw.coloring, bw.C1, bw.C2);
    CHECK(outb.kind == Outcome::Kind::BlueCycle);
    CHECK(outb.blue_cycle->n() == 7);
    auto rep = run_lemma_trials("half_cycle_odd", 8, 7, 0, 0, 25, 91, 0.5);
    INFO((rep.errors.empty() ? std::string() : rep.errors[0]));
    CHECK(rep.ok());
}

TEST_CASE("half_cycle_even n=6 and n=8") {
    int k = 8;
    for (int n : {6, 8}) {
        int N = (k - 1) * n + (n - 1) / 2;
        int a = n / 2 - 1, b = n / 2 + 1;
        auto rw = red_world(k, a, b, N);
        auto out = half_cycle_even(rw.coloring, rw.C1, rw.C2);
        CHECK(out.kind == Outcome::Kind::RedCycle);
        CHECK(out.red_cycle->n() == n / 2 + 1);
        auto bw = blue_world(k, a, b, N);
        auto outb = half_cycle_even(bw.coloring, bw.C1, bw.C2);
        CHECK(outb.kind == Outcome::Kind::BlueCycle);
        CHECK(outb.blue_cycle->n() == n);
    }
    auto rep = run_lemma_trials("half_cycle_even", 8, 6, 0, 0, 25, 17, 0.5);
    INFO((rep.errors.empty() ? std::string() : rep.errors[0]));
    CHECK(rep.ok());
}

TEST_CASE("engine determinism: identical inputs give identical traces") {
    auto setup = make_trial_configuration(8, 2, 2, (8 - 1) * 5 + 2, 123, 0.5);
    auto cfg = trial_cfg(setup);
    P2Hypothesis hyp;
    hyp.i = 1;
    hyp.j = 0;
    hyp.w1 = cfg.W[0];
    hyp.w2 = cfg.W[1];
    hyp.vprev = cfg.e_interior(0)[0];
    hyp.vnext = cfg.e_interior(0)[1];
    hyp.uprev = cfg.f_interior(1)[0];
    hyp.unext = cfg.f_interior(1)[1];
    hyp.leftover_side = 0;
    auto o1 = red_pair_path(cfg, hyp);
    auto o2 = red_pair_path(cfg, hyp);
    REQUIRE(o1.trace.probes.size() == o2.trace.probes.size());
    for (size_t t = 0; t < o1.trace.probes.size(); ++t) {
        CHECK(o1.trace.probes[t].edge == o2.trace.probes[t].edge);
        CHECK(o1.trace.probes[t].color == o2.trace.probes[t].color);
    }
    CHECK(o1.kind == o2.kind);
}
