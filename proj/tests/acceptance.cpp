// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "ramsey/cnf.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/trials.hpp"

using namespace ramsey;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;

    explicit Criterion(const char* n) : name(n) {}
    void expect(bool cond, const std::string& why) {
        if (!cond) {
            ok = false;
            if (!note.empty()) note += "; ";
            note += why;
        }
    }
    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("%-4s %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name, (long long)ms,
                    note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

TrialSetup forced_world(int k, int l1, int l2, int N, bool all_blue) {
    LooseCycle C1 = canonical_loose_cycle(l1, k);
    LooseCycle canon2 = canonical_loose_cycle(l2, k);
    std::vector<Edge> e2;
    for (const Edge& e : canon2.edges) {
        Edge shifted;
        for (Vertex v : e) shifted.push_back(v + l1 * (k - 1));
        e2.push_back(sorted(shifted));
    }
    LooseCycle C2 = *validate(e2, StructureKind::Cycle).cycle;
    if (all_blue) return {KUniformColoring::all_blue(N, k), C1, C2};
    auto base = KUniformColoring::all_red(N, k);
    std::vector<Edge> blues = C1.edges;
    blues.insert(blues.end(), C2.edges.begin(), C2.edges.end());
    return {base.with_forced(blues, Color::Blue), C1, C2};
}

}  // namespace

int main() {
    // 1. R(C^3_2, C^3_2) = 4, flagging the 2k-2 vs 2k-3 reading conflict
    {
        Criterion c("criterion 1: R(C^3_2,C^3_2) = 4 (exhaustive; flags the 2k-3 reading conflict)");
        auto r4 = ramsey_exhaustive(3, 2, 2, 4);
        c.expect(r4.all_arrow && r4.colorings_checked == 16, "N=4 must AllArrow over 16 colorings");
        auto r3 = ramsey_exhaustive(3, 2, 2, 3);
        c.expect(!r3.all_arrow && r3.counterexample.has_value(), "N=3 must yield a counterexample");
        int measured = 4, thm14_at_2 = (3 - 1) * 2 + 0, thm11i_literal = 2 * 3 - 3;
        c.expect(measured == thm14_at_2, "measured value must match the diagonal formula at n=2");
        c.expect(measured != thm11i_literal,
                 "conflict flag: the alternative reading 2k-3 disagrees with the measured "
                 "R = 2k-2");
        c.finish();
    }
    // 2. R(C^4_2, C^4_2) = 6
    {
        Criterion c("criterion 2: R(C^4_2,C^4_2) = 6 (exhaustive over 2^15 colorings)");
        auto r6 = ramsey_exhaustive(4, 2, 2, 6);
        c.expect(r6.all_arrow && r6.colorings_checked == (1ull << 15), "N=6 must AllArrow");
        auto r5 = ramsey_exhaustive(4, 2, 2, 5);
        c.expect(!r5.all_arrow, "N=5 must not arrow (no C^4_2 fits red side of the split)");
        c.finish();
    }
    // 3. Extremal witnesses
    {
        Criterion c("criterion 3: split extremal witnesses certify the lower bound");
        for (auto [k, n, m] : std::vector<std::array<int, 3>>{
                 {3, 3, 3}, {3, 4, 3}, {4, 3, 3}, {8, 3, 3}, {8, 5, 5}}) {
            auto [col, cert] = split_coloring_cycles(k, n, m);
            auto chk = check_certificate(col, cert);
            c.expect(chk.valid, "certificate invalid at (" + std::to_string(k) + "," +
                                    std::to_string(n) + "," + std::to_string(m) + ")");
            c.expect(col.N() == conjectured_ramsey(k, n, m, RamseyShape::CC) - 1,
                     "N must be the conjectured value minus one");
            bool feasible = (k == 3 && n <= 4) || (k == 4 && n <= 3);
            if (feasible)
                c.expect(!arrows(col, n, m).holds,
                         "detector found a monochromatic target in the extremal coloring");
        }
        c.finish();
    }
    // 4. Upper-bound evidence for R(C^3_3, C^3_3) = 7 + CNF export
    {
        Criterion c("criterion 4: 10k random colorings of K^3_7 arrow at each p; CNF emitted");
        for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            auto rep = ramsey_randomized(3, 3, 3, 7, 10000, 424242, p);
            c.expect(rep.failures.empty(),
                     "arrow failure at p=" + std::to_string(p) + " (would be a reportable counterexample)");
        }
        auto inst7 = export_cnf(3, 3, 3, 7);
        std::ofstream("cnf_3_3_3_7.cnf") << inst7.to_dimacs();
        c.expect(inst7.var_count == 35, "K^3_7 instance must have 35 variables");
        auto inst6 = export_cnf(3, 3, 3, 6);
        auto [ext, cert] = split_coloring_cycles(3, 3, 3);
        c.expect(satisfies(inst6, ext), "the split coloring must satisfy the N=6 instance");
        c.finish();
    }
    // 5. Engine totality
    {
        Criterion c("criterion 5: engine totality, 500 seeded trials per operation");
        struct Job {
            const char* name;
            int k, n, l1, l2, trials;
            double p;
        };
        std::vector<Job> jobs = {
            {"find_mono_c2", 8, 0, 0, 0, 500, 0.5},
            {"step_down_1", 6, 3, 0, 0, 250, 0.5},
            {"step_down_1", 6, 4, 0, 0, 250, 0.5},
            {"step_down_1", 8, 5, 0, 0, 250, 0.5},
            {"step_down_2", 6, 5, 0, 0, 250, 0.5},
            {"step_down_2", 8, 6, 0, 0, 500, 0.5},
            {"red_pair_path", 8, 0, 2, 2, 250, 0.1},
            {"red_pair_path", 8, 0, 2, 2, 250, 0.5},
            {"red_pair_path", 8, 0, 2, 3, 250, 0.9},
            {"red_pair_path_strong", 8, 0, 2, 2, 250, 0.5},
            {"red_pair_path_strong", 8, 0, 2, 3, 500, 0.5},
            {"branch_paths", 8, 0, 2, 2, 250, 0.5},
            {"branch_paths", 8, 0, 2, 3, 500, 0.5},
            {"ladder_extend", 8, 0, 4, 4, 200, 0.3},
            {"ladder_extend", 8, 0, 4, 4, 200, 0.7},
            {"ladder_extend", 8, 0, 4, 5, 100, 0.5},
            {"half_cycle_odd", 8, 5, 0, 0, 250, 0.5},
            {"half_cycle_odd", 8, 7, 0, 0, 250, 0.5},
            {"half_cycle_even", 8, 6, 0, 0, 250, 0.5},
            {"half_cycle_even", 8, 8, 0, 0, 250, 0.5},
        };
        int done = 0;
        for (const Job& j : jobs) {
            auto rep = run_lemma_trials(j.name, j.k, j.n, j.l1, j.l2, j.trials, 9000 + done, j.p);
            c.expect(rep.construction_errors == 0,
                     std::string(j.name) + ": construction errors (" +
                         (rep.errors.empty() ? "" : rep.errors[0]) + ")");
            c.expect(rep.errors.empty(),
                     std::string(j.name) + ": " + (rep.errors.empty() ? "" : rep.errors[0]));
            ++done;
        }
        c.finish();
    }
    // 6. Forced-branch laws
    {
        Criterion c("criterion 6: forced branches (all-blue and all-non-cycle-red worlds)");
        int k = 8;
        // red_pair_path / strong / branch_paths at l1=2, l2=3
        for (bool blue : {false, true}) {
            int N = (k - 1) * 5 + 2;
            auto w = forced_world(k, 2, 3, N, blue);
            auto cfg = make_configuration(w.coloring, w.C1, w.C2);
            P2Hypothesis hyp;
            hyp.i = 0;
            hyp.j = 0;
            hyp.w1 = cfg.W[0];
            hyp.w2 = cfg.W[1];
            hyp.vprev = cfg.C1.at(1);
            hyp.vnext = cfg.C1.at(k);
            hyp.uprev = cfg.C2.at(1);
            hyp.unext = cfg.C2.at(k);
            hyp.leftover_side = 1;
            auto o1 = red_pair_path(cfg, hyp);
            c.expect(o1.kind == (blue ? Outcome::Kind::BlueCycle : Outcome::Kind::RedPath),
                     std::string("red_pair_path wrong branch in ") + (blue ? "blue" : "red") +
                         " world");
            auto o2 = red_pair_path_strong(cfg, 0, 0, cfg.C1.at(1), cfg.C1.at(k), cfg.C2.at(1),
                                           cfg.C2.at(k));
            c.expect(o2.kind == (blue ? Outcome::Kind::BlueCycle : Outcome::Kind::RedPath),
                     "red_pair_path_strong wrong branch");
            int N3 = (k - 1) * 5 + 3;
            auto w3 = forced_world(k, 2, 3, N3, blue);
            auto cfg3 = make_configuration(w3.coloring, w3.C1, w3.C2);
            std::vector<Vertex> B = {cfg3.W[0], cfg3.W[1], cfg3.W[2]};
            auto o3 = branch_paths(cfg3, 0, 0, B);
            c.expect(blue ? o3.blue_cycle.has_value() : o3.pair.has_value(),
                     "branch_paths wrong branch");
            // ladder stages at l1 = l2 = 5 (room for the Final hook)
            int N4 = (k - 1) * 10 + 4;
            auto w4 = forced_world(k, 5, 5, N4, blue);
            auto cfg4 = make_configuration(w4.coloring, w4.C1, w4.C2);
            std::vector<Vertex> B4 = {cfg4.W[0], cfg4.W[1], cfg4.W[2]};
            auto bo = branch_paths(cfg4, 0, 0, B4);
            if (blue) {
                c.expect(bo.blue_cycle.has_value(), "branch_paths must go blue in the blue world");
            } else {
                c.expect(bo.pair.has_value(), "branch_paths must return the pair");
                auto lo = ladder_initial(cfg4, 0, 0, *bo.pair);
                c.expect(lo.state.has_value(), "ladder Initial must extend in the red world");
                auto so = ladder_step(cfg4, *lo.state);
                c.expect(so.state.has_value(), "ladder Step must extend");
                Edge used;
                for (const Edge& e : so.state->Epath()) used = set_union(used, e);
                for (const Edge& e : so.state->Fpath()) used = set_union(used, e);
                auto st = *so.state;
                Edge vpool = set_minus(
                    set_minus(cfg4.e(st.i0 + st.t + 1), Edge{cfg4.e_last(st.i0 + st.t + 1)}),
                    used);
                Edge upool = set_minus(
                    set_minus(cfg4.f(st.j0 + st.t + 1), Edge{cfg4.f_last(st.j0 + st.t + 1)}),
                    used);
                c.expect(!vpool.empty() && !upool.empty(), "final hook vertices missing");
                if (!vpool.empty() && !upool.empty()) {
                    auto fo = ladder_final(cfg4, st, vpool[0], upool[0]);
                    c.expect(fo.final_path.has_value(), "ladder Final must return the red path");
                }
            }
        }
        // half-cycle laws
        for (int n : {5, 7}) {
            int N = (k - 1) * n + (n - 1) / 2;
            auto rw = forced_world(k, (n - 1) / 2, (n + 1) / 2, N, false);
            auto o = half_cycle_odd(rw.coloring, rw.C1, rw.C2);
            c.expect(o.kind == Outcome::Kind::RedCycle && o.red_cycle->n() == (n + 1) / 2,
                     "half_cycle_odd red law at n=" + std::to_string(n));
            auto bw = forced_world(k, (n - 1) / 2, (n + 1) / 2, N, true);
            auto ob = half_cycle_odd(bw.coloring, bw.C1, bw.C2);
            c.expect(ob.kind == Outcome::Kind::BlueCycle && ob.blue_cycle->n() == n,
                     "half_cycle_odd blue law at n=" + std::to_string(n));
        }
        for (int n : {6, 8}) {
            int N = (k - 1) * n + (n - 1) / 2;
            auto rw = forced_world(k, n / 2 - 1, n / 2 + 1, N, false);
            auto o = half_cycle_even(rw.coloring, rw.C1, rw.C2);
            c.expect(o.kind == Outcome::Kind::RedCycle && o.red_cycle->n() == n / 2 + 1,
                     "half_cycle_even red law at n=" + std::to_string(n));
            auto bw = forced_world(k, n / 2 - 1, n / 2 + 1, N, true);
            auto ob = half_cycle_even(bw.coloring, bw.C1, bw.C2);
            c.expect(ob.kind == Outcome::Kind::BlueCycle && ob.blue_cycle->n() == n,
                     "half_cycle_even blue law at n=" + std::to_string(n));
        }
        c.finish();
    }
    // 7. Merge gadget
    {
        Criterion c("criterion 7: 1000 seeded connector pairs merge into C_{l1+l2}");
        int done = 0, want = 1000;
        uint64_t seed = 31337;
        int cerrs = 0;
        while (done < want) {
            for (auto [k, l1, l2] : std::vector<std::array<int, 3>>{
                     {6, 2, 2}, {6, 2, 3}, {6, 3, 3}, {8, 2, 2}, {8, 2, 3}, {8, 3, 3}}) {
                auto rep = run_lemma_trials("merge_cycles", k, 0, l1, l2, 50, seed++, 0.5);
                cerrs += rep.construction_errors + (int)rep.errors.size();
                done += rep.red_outcomes;
            }
        }
        c.expect(cerrs == 0, "merge failures: " + std::to_string(cerrs));
        c.expect(done >= want, "not enough merges exercised");
        // all-blue world: merged witness must be all blue (checked inside trials
        // via the blue background; assert once explicitly here)
        auto w = forced_world(8, 2, 2, (8 - 1) * 5 + 2, true);
        auto cfg = make_configuration(w.coloring, w.C1, w.C2);
        Edge inner_e = cfg.e_interior(0), inner_f = cfg.f_interior(0);
        std::vector<Vertex> gv = {cfg.C1.at(1), cfg.C2.at(8)};
        for (int t = 0; t < 3; ++t) gv.push_back(inner_e[t]);
        for (int t = 0; t < 3; ++t) gv.push_back(inner_f[t]);
        auto ca = classify_as(sorted(gv), cfg, 0, 0, ConnectorType::A);
        c.expect(ca.has_value(), "direct type-A connector failed to classify");
        if (ca) {
            Edge v2p = set_minus(set_minus(cfg.e(1), Edge{cfg.e_last(1)}), ca->g);
            Edge u2p = set_minus(set_minus(cfg.f(-1), Edge{cfg.f_first(-1)}), ca->g);
            auto cb = complement_connector(*ca, cfg, v2p[0], u2p[0]);
            auto merged = merge_cycles(cfg, *ca, cb);
            bool all_blue = true;
            for (const Edge& e : merged.edges) all_blue &= cfg.coloring.color(e) == Color::Blue;
            c.expect(all_blue && merged.n() == 4, "all-blue merge must be an all-blue C_4");
        }
        c.finish();
    }
    // 8. find_mono_c2 exhaustive
    {
        Criterion c("criterion 8: find_mono_c2 exhaustive over K^3_4 and K^4_6");
        for (uint64_t x = 0; x < 16; ++x) {
            std::vector<uint8_t> bits(1, (uint8_t)x);
            auto col = KUniformColoring::bitmap(4, 3, bits);
            auto [cc, cyc] = find_mono_c2(col);
            bool good = validate(cyc.edges, StructureKind::Cycle).ok && cyc.n() == 2;
            for (const Edge& e : cyc.edges) good &= col.color(e) == cc;
            if (!good) {
                c.expect(false, "failure on K^3_4 bitmap " + std::to_string(x));
                break;
            }
        }
        uint64_t m = binom(6, 4);
        for (uint64_t x = 0; x < (1ull << m); ++x) {
            std::vector<uint8_t> bits(2);
            bits[0] = (uint8_t)(x & 0xff);
            bits[1] = (uint8_t)(x >> 8);
            auto col = KUniformColoring::bitmap(6, 4, bits);
            auto [cc, cyc] = find_mono_c2(col);
            bool good = validate(cyc.edges, StructureKind::Cycle).ok && cyc.n() == 2;
            for (const Edge& e : cyc.edges) good &= col.color(e) == cc;
            if (!good) {
                c.expect(false, "failure on K^4_6 bitmap " + std::to_string(x));
                break;
            }
        }
        c.finish();
    }
    // 9. Format determinism
    {
        Criterion c("criterion 9: byte-identical .lrc and .cnf outputs; (3,2,2,4) counts");
        auto [c1, cert1] = split_coloring_cycles(8, 3, 3);
        auto [c2, cert2] = split_coloring_cycles(8, 3, 3);
        c.expect(c1.to_lrc() == c2.to_lrc(), ".lrc outputs differ across runs");
        auto r1 = random_coloring(6, 3, 99, 0.5), r2 = random_coloring(6, 3, 99, 0.5);
        c.expect(r1.to_lrc() == r2.to_lrc(), "seeded bitmap .lrc outputs differ");
        auto i1 = export_cnf(3, 2, 2, 4), i2 = export_cnf(3, 2, 2, 4);
        c.expect(i1.to_dimacs() == i2.to_dimacs(), ".cnf outputs differ across runs");
        c.expect(i1.var_count == 4 && i1.clauses.size() == 12,
                 "(3,2,2,4) must have 4 variables and 12 clauses");
        c.finish();
    }
    std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : "ACCEPTANCE FAILURES");
    return failures == 0 ? 0 : 1;
}
