#include "ramsey/trials.hpp"

#include <algorithm>

#include "ramsey/detect.hpp"

namespace ramsey {

namespace {

std::vector<Vertex> shuffled_vertices(int N, Rng& rng) {
    std::vector<Vertex> vs(N);
    for (int i = 0; i < N; ++i) vs[i] = i;
    for (int i = N - 1; i > 0; --i) std::swap(vs[i], vs[rng.below(i + 1)]);
    return vs;
}

LooseCycle plant_cycle(const std::vector<Vertex>& pool, size_t offset, int n, int k) {
    LooseCycle canon = canonical_loose_cycle(n, k);
    std::vector<Edge> edges;
    for (const Edge& e : canon.edges) {
        std::vector<Vertex> vs;
        for (Vertex v : e) vs.push_back(pool[offset + (size_t)v]);
        edges.push_back(sorted(vs));
    }
    auto res = validate(edges, StructureKind::Cycle);
    if (!res.ok) throw ConstructionError("planted cycle invalid: " + res.reason);
    return *res.cycle;
}

}  // namespace

TrialSetup make_trial_configuration(int k, int l1, int l2, int N, uint64_t seed, double p_red) {
    if (N < (l1 + l2) * (k - 1) + 2) throw InvalidParameters("trial host too small");
    Rng rng(seed);
    auto pool = shuffled_vertices(N, rng);
    LooseCycle C1 = plant_cycle(pool, 0, l1, k);
    LooseCycle C2 = plant_cycle(pool, (size_t)l1 * (k - 1), l2, k);
    uint32_t num = (uint32_t)(p_red * 1000000.0 + 0.5);
    KUniformColoring base = KUniformColoring::hash_rule(N, k, rng.next(), num, 1000000);
    std::vector<Edge> blue_edges = C1.edges;
    blue_edges.insert(blue_edges.end(), C2.edges.begin(), C2.edges.end());
    TrialSetup s{base.with_forced(blue_edges, Color::Blue), C1, C2};
    return s;
}

CycleConfiguration trial_cfg(const TrialSetup& s) {
    return make_configuration(s.coloring, s.C1, s.C2);
}

std::pair<KUniformColoring, LooseCycle> make_planted_red_cycle(int k, int n, int N, uint64_t seed,
                                                               double p_red) {
    if (N < n * (k - 1)) throw InvalidParameters("host too small for the planted cycle");
    Rng rng(seed);
    auto pool = shuffled_vertices(N, rng);
    LooseCycle C = plant_cycle(pool, 0, n, k);
    uint32_t num = (uint32_t)(p_red * 1000000.0 + 0.5);
    KUniformColoring base = KUniformColoring::hash_rule(N, k, rng.next(), num, 1000000);
    return {base.with_forced(C.edges, Color::Red), C};
}

namespace {

void expect(bool cond, const std::string& what, LemmaTrialReport& rep) {
    if (!cond && rep.errors.size() < 5) rep.errors.push_back(what);
}

void record_outcome(const Outcome& out, LemmaTrialReport& rep) {
    rep.last_trace = out.trace;
    if (out.kind == Outcome::Kind::RedPath) {
        rep.last_variant = "RedPath";
        rep.last_structure = out.red_path->edges;
    } else if (out.kind == Outcome::Kind::RedCycle) {
        rep.last_variant = "RedCycle";
        rep.last_structure = out.red_cycle->edges;
    } else {
        rep.last_variant = "BlueCycle";
        rep.last_structure = out.blue_cycle->edges;
    }
}

void check_outcome_structure(const KUniformColoring& c, const Outcome& out,
                             LemmaTrialReport& rep) {
    record_outcome(out, rep);
    if (out.kind == Outcome::Kind::RedPath) {
        auto r = validate(out.red_path->edges, StructureKind::Path);
        expect(r.ok, "red path fails validation", rep);
        for (const Edge& e : out.red_path->edges)
            expect(c.color(e) == Color::Red, "red path has a blue edge", rep);
        ++rep.red_outcomes;
    } else if (out.kind == Outcome::Kind::RedCycle) {
        auto r = validate(out.red_cycle->edges, StructureKind::Cycle);
        expect(r.ok, "red cycle fails validation", rep);
        for (const Edge& e : out.red_cycle->edges)
            expect(c.color(e) == Color::Red, "red cycle has a blue edge", rep);
        ++rep.red_outcomes;
    } else {
        auto r = validate(out.blue_cycle->edges, StructureKind::Cycle);
        expect(r.ok, "blue cycle fails validation", rep);
        for (const Edge& e : out.blue_cycle->edges)
            expect(c.color(e) == Color::Blue, "blue cycle has a red edge", rep);
        ++rep.blue_outcomes;
    }
}

P2Hypothesis random_p2_hypothesis(const CycleConfiguration& cfg, Rng& rng, bool with_c) {
    P2Hypothesis hyp;
    hyp.i = rng.below(cfg.l1());
    hyp.j = rng.below(cfg.l2());
    auto pick = [&](const Edge& pool) { return pool[rng.below((int)pool.size())]; };
    for (int attempt = 0; attempt < 200; ++attempt) {
        Edge vp_pool = set_minus(cfg.e(hyp.i - 1), Edge{cfg.e_first(hyp.i - 1)});
        Edge vn_pool = set_minus(cfg.e(hyp.i + 1), Edge{cfg.e_last(hyp.i + 1)});
        Edge up_pool = set_minus(cfg.f(hyp.j - 1), Edge{cfg.f_first(hyp.j - 1)});
        Edge un_pool = set_minus(cfg.f(hyp.j + 1), Edge{cfg.f_last(hyp.j + 1)});
        hyp.vprev = pick(vp_pool);
        hyp.vnext = pick(vn_pool);
        hyp.uprev = pick(up_pool);
        hyp.unext = pick(un_pool);
        std::vector<Vertex> ls = {hyp.vprev, hyp.vnext, hyp.uprev, hyp.unext};
        std::sort(ls.begin(), ls.end());
        if (std::adjacent_find(ls.begin(), ls.end()) == ls.end()) break;
    }
    if (with_c && rng.coin()) hyp.C = cfg.e_interior(hyp.i)[rng.below(cfg.k() - 2)];
    int w1i = rng.below((int)cfg.W.size());
    int w2i = rng.below((int)cfg.W.size() - 1);
    if (w2i >= w1i) ++w2i;
    hyp.w1 = cfg.W[w1i];
    hyp.w2 = cfg.W[w2i];
    hyp.leftover_side = rng.coin() ? 1 : 0;
    return hyp;
}

}  // namespace

LemmaTrialReport run_lemma_trials(const std::string& name, int k, int n, int l1, int l2,
                                  int trials, uint64_t seed, double p_red) {
    LemmaTrialReport rep;
    for (int t = 0; t < trials; ++t) {
        uint64_t ts = splitmix64(seed + (uint64_t)t);
        Rng rng(ts ^ 0x9e3779b9);
        ++rep.trials;
        try {
            if (name == "find_mono_c2") {
                int N = n > 0 ? n : 2 * k - 2;
                KUniformColoring c = random_coloring(N, k, ts, p_red);
                auto [col, cyc] = find_mono_c2(c);
                auto r = validate(cyc.edges, StructureKind::Cycle);
                expect(r.ok && cyc.n() == 2, "find_mono_c2 witness invalid", rep);
                for (const Edge& e : cyc.edges)
                    expect(c.color(e) == col, "find_mono_c2 witness not monochromatic", rep);
                ++(col == Color::Red ? rep.red_outcomes : rep.blue_outcomes);
            } else if (name == "step_down_1" || name == "step_down_2") {
                int N = n * (k - 1) + rng.below(3);
                auto [c, C] = make_planted_red_cycle(k, n, N, ts, p_red);
                Outcome out = name == "step_down_1" ? step_down_1(c, C) : step_down_2(c, C);
                check_outcome_structure(c, out, rep);
                int down = name == "step_down_1" ? 1 : 2;
                if (out.kind == Outcome::Kind::RedCycle)
                    expect(out.red_cycle->n() == n - down, "wrong red cycle length", rep);
                else
                    expect(out.blue_cycle->n() == n, "wrong blue cycle length", rep);
            } else if (name == "red_pair_path" || name == "red_pair_path_strong") {
                int nn = std::max(l1 + l2, 5);
                int N = (k - 1) * nn + (nn - 1) / 2;
                auto setup = make_trial_configuration(k, l1, l2, N, ts, p_red);
                auto cfg = trial_cfg(setup);
                if (name == "red_pair_path") {
                    P2Hypothesis hyp = random_p2_hypothesis(cfg, rng, true);
                    Outcome out = red_pair_path(cfg, hyp);
                    check_outcome_structure(cfg.coloring, out, rep);
                    if (out.kind == Outcome::Kind::RedPath)
                        expect(check_p2_conditions(cfg, hyp, *out.red_path).empty(),
                               "P2 conditions violated", rep);
                    else
                        expect(out.blue_cycle->n() == cfg.l1() + cfg.l2(),
                               "blue witness has wrong length", rep);
                } else {
                    P2Hypothesis hyp = random_p2_hypothesis(cfg, rng, false);
                    Outcome out = red_pair_path_strong(cfg, hyp.i, hyp.j, hyp.vprev, hyp.vnext,
                                                       hyp.uprev, hyp.unext);
                    check_outcome_structure(cfg.coloring, out, rep);
                    if (out.kind == Outcome::Kind::RedPath)
                        expect(check_p2_strong_conditions(cfg, hyp.i, hyp.j, hyp.vprev, hyp.vnext,
                                                          hyp.uprev, hyp.unext, *out.red_path)
                                   .empty(),
                               "strong P2 conditions violated", rep);
                }
            } else if (name == "branch_paths") {
                int nn = std::max(l1 + l2, 5);
                int N = (k - 1) * nn + std::max((nn - 1) / 2, 3);
                auto setup = make_trial_configuration(k, l1, l2, N, ts, p_red);
                auto cfg = trial_cfg(setup);
                int i = rng.below(cfg.l1()), j = rng.below(cfg.l2());
                std::vector<Vertex> B = {cfg.W[0], cfg.W[1], cfg.W[2]};
                BranchOutcome out = branch_paths(cfg, i, j, B);
                if (out.pair) {
                    expect(check_branch_conditions(cfg, i, j, B, *out.pair).empty(),
                           "branch conditions violated", rep);
                    ++rep.red_outcomes;
                } else {
                    auto r = validate(out.blue_cycle->edges, StructureKind::Cycle);
                    expect(r.ok, "branch blue witness invalid", rep);
                    for (const Edge& e : out.blue_cycle->edges)
                        expect(cfg.coloring.color(e) == Color::Blue,
                               "branch blue witness not blue", rep);
                    ++rep.blue_outcomes;
                }
            } else if (name == "ladder_extend") {
                int nn = std::max(l1 + l2, 5);
                int N = (k - 1) * nn + std::max((nn - 1) / 2, 4);
                auto setup = make_trial_configuration(k, l1, l2, N, ts, p_red);
                auto cfg = trial_cfg(setup);
                std::vector<Vertex> B = {cfg.W[0], cfg.W[1], cfg.W[2]};
                BranchOutcome bo = branch_paths(cfg, 0, 0, B);
                if (!bo.pair) {
                    ++rep.blue_outcomes;
                    continue;
                }
                LadderOutcome lo = ladder_initial(cfg, 0, 0, *bo.pair);
                if (lo.blue_cycle) {
                    ++rep.blue_outcomes;
                    continue;
                }
                LadderState st = *lo.state;
                bool blue = false;
                while (st.t < std::min(cfg.l1(), cfg.l2()) - 2) {
                    LadderOutcome so = ladder_step(cfg, st);
                    if (so.blue_cycle) {
                        blue = true;
                        break;
                    }
                    expect(check_ladder_state(cfg, *so.state).empty(), "P1/P2 violated", rep);
                    st = *so.state;
                }
                if (blue) {
                    ++rep.blue_outcomes;
                    continue;
                }
                // final hook: fresh vertices in the next cycle edges
                int t = st.t + 1;
                Edge everts, fverts;
                for (const Edge& e : st.Epath()) everts = set_union(everts, e);
                for (const Edge& e : st.Fpath()) fverts = set_union(fverts, e);
                Edge used = set_union(everts, fverts);
                Edge vpool = set_minus(
                    set_minus(cfg.e(st.i0 + t), Edge{cfg.e_last(st.i0 + t)}), used);
                Edge upool = set_minus(
                    set_minus(cfg.f(st.j0 + t), Edge{cfg.f_last(st.j0 + t)}), used);
                if (vpool.empty() || upool.empty()) {
                    ++rep.red_outcomes;  // no Final hook available on this draw
                    continue;
                }
                LadderOutcome fo = ladder_final(cfg, st, vpool.front(), upool.front());
                if (fo.blue_cycle) {
                    ++rep.blue_outcomes;
                } else {
                    auto r = validate(fo.final_path->edges, StructureKind::Path);
                    expect(r.ok && fo.final_path->n() == 2 * (st.t + 1),
                           "final path invalid", rep);
                    for (const Edge& e : fo.final_path->edges)
                        expect(cfg.coloring.color(e) == Color::Red, "final path not red", rep);
                    ++rep.red_outcomes;
                }
            } else if (name == "half_cycle_odd" || name == "half_cycle_even") {
                bool odd = name == "half_cycle_odd";
                int nn = n;
                int a = odd ? (nn - 1) / 2 : nn / 2 - 1;
                int b = odd ? (nn + 1) / 2 : nn / 2 + 1;
                int N = (k - 1) * nn + (nn - 1) / 2;
                auto setup = make_trial_configuration(k, a, b, N, ts, p_red);
                Outcome out = odd ? half_cycle_odd(setup.coloring, setup.C1, setup.C2)
                                  : half_cycle_even(setup.coloring, setup.C1, setup.C2);
                check_outcome_structure(setup.coloring, out, rep);
                int half = odd ? (nn + 1) / 2 : nn / 2 + 1;
                if (out.kind == Outcome::Kind::RedCycle)
                    expect(out.red_cycle->n() == half, "wrong red half-cycle length", rep);
                else
                    expect(out.blue_cycle->n() == nn, "wrong blue cycle length", rep);
            } else if (name == "merge_cycles") {
                int nn = std::max(l1 + l2, 5);
                int N = (k - 1) * nn + std::max((nn - 1) / 2, 2);
                auto setup = make_trial_configuration(k, l1, l2, N, ts, p_red);
                auto cfg = trial_cfg(setup);
                int i = rng.below(cfg.l1()), j = rng.below(cfg.l2());
                bool cd = rng.coin();
                // build a connector of type A (or C) directly, then complement it
                Edge inner_e = cfg.e_interior(i), inner_f = cfg.f_interior(j);
                Edge vp_pool = set_minus(cfg.e(i - 1), Edge{cfg.e_first(i - 1)});
                Edge up_pool = cd ? set_minus(cfg.f(j - 1), Edge{cfg.f_first(j - 1)})
                                  : set_minus(cfg.f(j + 1), Edge{cfg.f_last(j + 1)});
                Vertex vp = vp_pool[rng.below((int)vp_pool.size())];
                Vertex up = up_pool[rng.below((int)up_pool.size())];
                if (vp == up) continue;
                int p = 1 + rng.below(std::min(k - 4, (int)inner_e.size() + 1));
                int q = rng.below(2);
                std::vector<Vertex> gv = {vp, up};
                for (int z = 0; z < p - 1; ++z) gv.push_back(inner_e[z]);
                for (int z = 0; z < q; ++z) gv.push_back(cfg.W[z]);
                for (int z = 0; (int)gv.size() < k; ++z) gv.push_back(inner_f[z]);
                Edge g = sorted(gv);
                auto ca = classify_as(g, cfg, i, j, cd ? ConnectorType::C : ConnectorType::A);
                if (!ca) {
                    expect(false, "direct connector failed to classify", rep);
                    continue;
                }
                Edge v2_pool = cd ? set_minus(set_minus(cfg.e(i + 1), Edge{cfg.e_last(i + 1)}), g)
                                  : set_minus(set_minus(cfg.e(i + 1), Edge{cfg.e_last(i + 1)}), g);
                Edge u2_pool = cd ? set_minus(set_minus(cfg.f(j + 1), Edge{cfg.f_last(j + 1)}), g)
                                  : set_minus(set_minus(cfg.f(j - 1), Edge{cfg.f_first(j - 1)}), g);
                if (v2_pool.empty() || u2_pool.empty()) continue;
                ConnectorEdge cb =
                    complement_connector(*ca, cfg, v2_pool.front(), u2_pool.front());
                LooseCycle merged = merge_cycles(cfg, *ca, cb);
                auto rr = validate(merged.edges, StructureKind::Cycle);
                expect(rr.ok && merged.n() == cfg.l1() + cfg.l2(), "merge output invalid", rep);
                ++rep.red_outcomes;
            } else {
                throw InvalidParameters("unknown lemma name: " + name);
            }
        } catch (const ConstructionError& e) {
            ++rep.construction_errors;
            if (rep.errors.size() < 5)
                rep.errors.push_back(std::string("ConstructionError: ") + e.what());
        } catch (const InvalidInput&) {
            // a rejected hypothesis draw does not count against the lemma
        }
    }
    return rep;
}

}  // namespace ramsey
