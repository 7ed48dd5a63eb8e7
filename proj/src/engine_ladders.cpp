#include <algorithm>

#include "engine_detail.hpp"

// The probe ladders of the branching-path lemma, the ladder-extension lemmas
// and the half-cycle pipelines. Each ladder follows its proof step by step:
// a red probe closes the red structure with the named partner edge (partner
// probed too: a blue partner merges with the blue edge in hand), and the
// final all-blue terminal merges two disjoint complementary blue connectors.

namespace ramsey {

using namespace detail;

namespace {

LooseCycle merge_or_throw(const CycleConfiguration& cfg, int i, int j, const Edge& a,
                          const Edge& b) {
    return merge_blue(cfg, i, j, a, b);
}

// tries to merge q against any of the recorded blue edges (k-odd corners of
// the n=6 pipeline where no specific pairing is forced)
LooseCycle merge_with_any(const CycleConfiguration& cfg, int i, int j, const Edge& q,
                          const std::vector<Edge>& blues) {
    for (const Edge& b : blues) {
        if (!set_disjoint(q, b)) continue;
        try {
            return merge_blue(cfg, i, j, q, b);
        } catch (const ConstructionError&) {
        }
    }
    throw ConstructionError("no disjoint complementary blue partner in hand");
}

Edge as_edge(const std::vector<Vertex>& vs) { return sorted(vs); }

}  // namespace

// ---- LadderState accessors -------------------------------------------------------

std::vector<Edge> LadderState::Epath() const {
    std::vector<Edge> out = common;
    out.push_back(lastE.a);
    out.push_back(lastE.b);
    return out;
}

std::vector<Edge> LadderState::Fpath() const {
    std::vector<Edge> out = common;
    out.push_back(lastF.a);
    out.push_back(lastF.b);
    return out;
}

const Edge& LadderState::e_of(const CycleConfiguration& cfg, int step) const {
    return cfg.e(i0 + step - 1);
}

const Edge& LadderState::f_of(const CycleConfiguration& cfg, int step) const {
    return cfg.f(j0 + step - 1);
}

// ---- branch_paths ----------------------------------------------------------------

namespace {

struct JadidResult {
    bool is_blue = false;
    std::optional<LooseCycle> blue;
    Edge g1, g1p, g1b;
};

// Claim "g is red" of the branching-path lemma, run from a blue seed in
// canonical A-form: h1 = {X1} + X[2..q] + {w1} + Y[k-Q+1..k-1] + {Yk}.
JadidResult jadid_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j) {
    const int k = fr.k;
    const int q = (k - 1) / 2;
    const int Q = (k - 1) - q;
    std::vector<Vertex> xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    std::sort(xints.begin(), xints.end());
    std::sort(yints.begin(), yints.end());

    auto partner = [&](const Edge& base, Vertex z1, Vertex z2) {
        Edge core = frame_all(fr, {fr.w2});
        core = set_minus(core, set_union(base, sorted({z1, z2})));
        if ((int)core.size() != k) throw ConstructionError("jadid partner has wrong size");
        return core;
    };
    auto two_free = [&](const std::vector<Vertex>& pool, const Edge& avoid) {
        std::vector<Vertex> out;
        for (Vertex v : pool) {
            if (set_contains(avoid, v)) continue;
            out.push_back(v);
            if (out.size() == 2) return out;
        }
        throw ConstructionError("jadid: fewer than two free vertices");
    };
    auto blue_result = [&](const Edge& a, const Edge& b) {
        JadidResult r;
        r.is_blue = true;
        r.blue = merge_or_throw(cfg, i, j, a, b);
        return r;
    };
    auto red_result = [&](Edge g1, Edge g1p, Edge g1b) {
        JadidResult r;
        r.g1 = std::move(g1);
        r.g1p = std::move(g1p);
        r.g1b = std::move(g1b);
        return r;
    };

    Edge h = frame_edge(fr, rng(1, q), rng(k - Q + 1, k - 1), {fr.w1, fr.Y[k]});

    // X sweep: swap X[t] out, X[k-t+1] in
    for (int t = 2; t <= q; ++t) {
        Edge hn = replace_one(h, fr.X[t], fr.X[k - t + 1]);
        if (ctx.red(hn)) {
            auto us = two_free(yints, hn);
            Vertex v = pick_min_in(as_edge(xints), set_union(hn, Edge{fr.X[t]}));
            Edge hp = partner(h, us[0], v);
            if (!ctx.red(hp)) return blue_result(h, hp);
            Edge hb = partner(h, us[0], us[1]);
            if (!ctx.red(hb)) return blue_result(h, hb);
            return red_result(hn, hp, hb);
        }
        h = hn;
    }
    // Y sweep: swap Y[k-t] out, Y[t+1] in
    for (int t = 1; t <= Q - 1; ++t) {
        Edge hn = replace_one(h, fr.Y[k - t], fr.Y[t + 1]);
        if (ctx.red(hn)) {
            std::vector<Vertex> xs;
            for (Vertex v : xints)
                if (!set_contains(hn, v)) xs.push_back(v);
            if (xs.size() < 2) throw ConstructionError("jadid: X side exhausted");
            Vertex u = pick_min_in(as_edge(yints), set_union(hn, Edge{fr.Y[k - t]}));
            Edge hp = partner(h, xs[0], xs[1]);
            if (!ctx.red(hp)) return blue_result(h, hp);
            Edge hb = partner(h, xs[0], u);
            if (!ctx.red(hb)) return blue_result(h, hb);
            return red_result(hn, hp, hb);
        }
        h = hn;
    }
    // step k-1: swap {X1, w1} for {Xk, w3}
    Edge hk1 = set_union(set_minus(h, sorted({fr.X[1], fr.w1})), sorted({fr.X[k], fr.w3}));
    if (ctx.red(hk1)) {
        auto us = two_free(yints, hk1);
        Vertex v = pick_min_in(as_edge(xints), hk1);
        Edge hp = partner(h, us[0], v);
        if (!ctx.red(hp)) return blue_result(h, hp);
        Edge hb = partner(h, us[0], us[1]);
        if (!ctx.red(hb)) return blue_result(h, hb);
        return red_result(hk1, hp, hb);
    }
    // step k: swap Yk for Y1. Both partners exclude a common X vertex so the
    // excluded-vertex bullet has a witness on the e side; the E partner drops
    // a second X interior, the F partner a Y interior.
    Edge hk = replace_one(hk1, fr.Y[k], fr.Y[1]);
    if (ctx.red(hk)) {
        auto vs2 = two_free(xints, hk);
        Vertex u0 = pick_min_in(as_edge(yints), hk);
        Edge hp = partner(hk1, vs2[0], vs2[1]);
        if (!ctx.red(hp)) return blue_result(hp, hk1);  // C against blue D in hand
        Edge hb = partner(hk1, vs2[0], u0);
        if (!ctx.red(hb)) return blue_result(hb, hk1);
        return red_result(hk, hp, hb);
    }
    // terminal: hk is a blue B-connector disjoint from the seed
    Edge h1 = frame_edge(fr, rng(1, q), rng(k - Q + 1, k - 1), {fr.w1, fr.Y[k]});
    return blue_result(h1, hk);
}

BranchPair assemble_branch_pair(const CycleConfiguration& cfg, int i, int j,
                                const std::vector<Vertex>& B, Edge g1, Edge g1p, Edge g1b) {
    BranchPair bp;
    bp.g1 = std::move(g1);
    bp.g1p = std::move(g1p);
    bp.g1b = std::move(g1b);
    Edge used = set_union(set_union(bp.g1, bp.g1p), bp.g1b);
    // prefer excluded vertices away from the connection vertices so the pair
    // can feed the extension ladder, which needs vbar/ubar as link candidates
    auto pick = [&](const Edge& edge, Vertex first, Vertex last) {
        Edge avoid = set_union(used, sorted({std::min(first, last), std::max(first, last)}));
        for (Vertex v : edge)
            if (!set_contains(avoid, v)) return v;
        return pick_min_in(edge, used);
    };
    bp.vbar = pick(cfg.e(i), cfg.e_first(i), cfg.e_last(i));
    bp.ubar = pick(cfg.f(j), cfg.f_first(j), cfg.f_last(j));
    for (Vertex w : B)
        if (set_contains(used, w)) bp.Bprime.push_back(w);
    return bp;
}

}  // namespace

namespace detail {

BranchOutcome branch_paths_impl(Ctx& ctx, const CycleConfiguration& cfg, int i, int j,
                                const std::vector<Vertex>& B) {
    if (cfg.k() < 8) throw InvalidInput("branch_paths needs k >= 8");
    if (B.size() != 3) throw InvalidInput("branch_paths needs |B| = 3");
    Edge Bs = sorted(B);
    Edge Wset(cfg.W.begin(), cfg.W.end());
    for (Vertex w : Bs)
        if (!set_contains(Wset, w)) throw InvalidInput("B must lie inside W");

    const int k = cfg.k();
    const int q = (k - 1) / 2;
    const int Q = (k - 1) - q;
    FrameSpec spec;
    spec.i = i;
    spec.j = j;
    spec.w1 = Bs[0];
    spec.w2 = Bs[1];
    spec.w3 = Bs[2];
    Frame fr = build_frame(cfg, spec, nullptr);

    Edge g1 = frame_edge(fr, rng(1, q), rng(k - Q + 1, k - 1), {fr.w1, fr.Y[k]});
    std::vector<int> xp = {q};
    for (int p : rng(q + 3, k)) xp.push_back(p);
    Edge g1p = frame_edge(fr, xp, rng(1, q), {fr.w2});
    std::vector<int> yb = rng(1, q - 1);
    yb.push_back(q + 2);
    Edge g1b = frame_edge(fr, rng(q + 2, k), yb, {fr.w2});

    auto run_ladder = [&](const Edge& seed, bool swapped) {
        FrameSpec ls = spec;
        if (swapped) {
            ls.swap_sides = true;
            // the seed carries one B-vertex; it takes the w1 slot
            Vertex carried = -1;
            for (Vertex w : Bs)
                if (set_contains(seed, w)) carried = w;
            if (carried < 0) throw ConstructionError("swapped seed carries no B vertex");
            std::vector<Vertex> rest;
            for (Vertex w : Bs)
                if (w != carried) rest.push_back(w);
            ls.w1 = carried;
            ls.w2 = rest[0];
            ls.w3 = rest[1];
        }
        Frame lf = build_frame(cfg, ls, &seed);
        JadidResult jr = jadid_ladder(ctx, cfg, lf, i, j);
        // in the swapped frame the X/Y roles flip, so the partner that leaves
        // e_i room for E1 is the hpp-form one: swap the two far edges back
        if (swapped && !jr.is_blue) std::swap(jr.g1p, jr.g1b);
        return jr;
    };

    JadidResult res;
    bool ladder_used = false;
    if (!ctx.red(g1)) {
        res = run_ladder(g1, false);
        ladder_used = true;
    } else if (!ctx.red(g1p)) {
        res = run_ladder(g1p, true);
        ladder_used = true;
    } else if (!ctx.red(g1b)) {
        res = run_ladder(g1b, true);
        ladder_used = true;
    }

    BranchOutcome out;
    if (ladder_used && res.is_blue) {
        assert_mono(cfg.coloring, res.blue->edges, Color::Blue, "branch_paths blue witness");
        out.blue_cycle = *res.blue;
        out.trace = ctx.trace;
        return out;
    }
    BranchPair bp = ladder_used ? assemble_branch_pair(cfg, i, j, B, res.g1, res.g1p, res.g1b)
                                : assemble_branch_pair(cfg, i, j, B, g1, g1p, g1b);
    assert_mono(cfg.coloring, {bp.g1, bp.g1p, bp.g1b}, Color::Red, "branch_paths red paths");
    std::string bad = check_branch_conditions(cfg, i, j, B, bp);
    if (!bad.empty()) throw ConstructionError("branch_paths output violates " + bad);
    out.pair = std::move(bp);
    out.trace = ctx.trace;
    return out;
}

}  // namespace detail

BranchOutcome branch_paths(const CycleConfiguration& cfg, int i, int j,
                           const std::vector<Vertex>& B) {
    Ctx ctx(cfg.coloring);
    return detail::branch_paths_impl(ctx, cfg, i, j, B);
}

std::string check_branch_conditions(const CycleConfiguration& cfg, int i, int j,
                                    const std::vector<Vertex>& B, const BranchPair& bp) {
    auto r1 = validate({bp.g1, bp.g1p}, StructureKind::Path);
    auto r2 = validate({bp.g1, bp.g1b}, StructureKind::Path);
    if (!r1.ok) return "E1 is not a 2-path: " + r1.reason;
    if (!r2.ok) return "F1 is not a 2-path: " + r2.reason;
    Edge Bs = sorted(B);
    Edge U = set_union(set_union(bp.g1, bp.g1p), bp.g1b);
    Edge ef = set_union(cfg.e(i), cfg.f(j));
    Edge bprime = set_inter(U, Bs);
    if (bprime.size() != 2) return "bullet 1: |B'| != 2";
    for (Vertex v : U)
        if (!set_contains(ef, v) && !set_contains(bprime, v))
            return "bullet 1: vertex outside e_i, f_j, B'";
    if (!set_contains(cfg.e(i), bp.vbar) || set_contains(U, bp.vbar))
        return "bullet 1: vbar not an uncovered e_i vertex";
    if (!set_contains(cfg.f(j), bp.ubar) || set_contains(U, bp.ubar))
        return "bullet 1: ubar not an uncovered f_j vertex";
    Edge E1 = set_union(bp.g1, bp.g1p);
    Edge F1 = set_union(bp.g1, bp.g1b);
    Edge e_block = set_union(sorted({std::min(cfg.e_first(i), cfg.e_last(i)),
                                     std::max(cfg.e_first(i), cfg.e_last(i))}),
                             Edge{bp.vbar});
    Edge f_block = set_union(sorted({std::min(cfg.f_first(j), cfg.f_last(j)),
                                     std::max(cfg.f_first(j), cfg.f_last(j))}),
                             Edge{bp.ubar});
    if (set_minus(set_minus(cfg.e(i), E1), e_block).empty()) return "bullet 2: e_i leftover";
    if (set_minus(set_minus(cfg.f(j), F1), f_block).empty()) return "bullet 2: f_j leftover";
    Edge inner_e = cfg.e_interior(i), inner_f = cfg.f_interior(j);
    auto side_counts = [&](const Edge& a, const Edge& b) {
        Edge d = set_minus(a, b);
        return std::pair<int, int>{(int)set_inter(d, inner_e).size(),
                                   (int)set_inter(d, inner_f).size()};
    };
    for (auto [x, y] : {side_counts(bp.g1p, bp.g1), side_counts(bp.g1, bp.g1p),
                        side_counts(bp.g1b, bp.g1), side_counts(bp.g1, bp.g1b)}) {
        if (x < 1) return "bullets 3-6: e_i interior overlap";
        if (y < 1) return "bullets 3-6: f_j interior overlap";
    }
    auto bcount = [&](const Edge& a, const Edge& b) {
        return (int)set_inter(set_minus(a, b), bprime).size();
    };
    if (bcount(bp.g1, bp.g1p) != 1 || bcount(bp.g1p, bp.g1) != 1 || bcount(bp.g1, bp.g1b) != 1 ||
        bcount(bp.g1b, bp.g1) != 1)
        return "bullet 7: B' distribution";
    return "";
}

// ---- ladder stages ---------------------------------------------------------------

namespace {

// shared result of the four stage ladders: either a blue cycle or the red pair
// (attach-side first) plus which path the pair extends (0 = E, 1 = F, -1 = any)
struct StageResult {
    bool is_blue = false;
    std::optional<LooseCycle> blue;
    Edge ga, gb;   // E-pair
    Edge fa, fb;   // F-pair
    int attach = -1;
};

// Claim "g is red" used by stage Initial (lemma "there is a P:3").
// Seed h1 = {x} + X[2..k/2] + Y[k/2+1..k-1] + {Yk}, connections: x and w come
// from the previous pair, vbar/ubar are its excluded vertices.
StageResult gr4_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j,
                       Vertex x, Vertex w, Vertex vbar, Vertex ubar) {
    const int k = fr.k;
    const int q2 = k / 2;
    std::vector<Vertex> xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    std::sort(xints.begin(), xints.end());
    std::sort(yints.begin(), yints.end());
    auto partner = [&](const Edge& base, std::vector<Vertex> excl, std::vector<Vertex> incl) {
        Edge core = frame_all(fr, {w});
        excl.push_back(fr.X[1]);
        excl.push_back(fr.Y[1]);
        core = set_minus(core, set_union(base, sorted(excl)));
        for (Vertex v : incl) core = set_union(core, Edge{v});
        if ((int)core.size() != k) {
            std::string m = "gr4 partner has wrong size " + std::to_string(core.size()) +
                            " base={";
            for (Vertex v : base) m += std::to_string(v) + ",";
            m += "} excl={";
            for (Vertex v : excl) m += std::to_string(v) + ",";
            m += "} incl={";
            for (Vertex v : incl) m += std::to_string(v) + ",";
            m += "} x=" + std::to_string(x) + " w=" + std::to_string(w);
            throw ConstructionError(m);
        }
        return core;
    };
    auto blue_result = [&](const Edge& a, const Edge& b) {
        StageResult r;
        r.is_blue = true;
        r.blue = merge_or_throw(cfg, i, j, a, b);
        return r;
    };
    auto red_same = [&](const Edge& attach, const Edge& far) {
        StageResult r;
        r.ga = attach;
        r.gb = far;
        r.fa = attach;
        r.fb = far;
        return r;
    };

    Edge h1 = frame_edge(fr, rng(2, q2), rng(q2 + 1, k - 1), {x, fr.Y[k]});
    // step 2: swap the link x for Xk
    Edge h2 = replace_one(h1, x, fr.X[k]);
    if (ctx.red(h2)) {
        Vertex vt = pick_min_in(as_edge(xints), h2);
        Vertex ut = pick_min_in(as_edge(yints), h2);
        Edge hp = partner(h1, {vt}, {ubar});
        if (!ctx.red(hp)) return blue_result(h1, hp);
        Edge hb = partner(h1, {ut}, {ubar});
        if (!ctx.red(hb)) return blue_result(h1, hb);
        StageResult r;
        r.ga = hp;
        r.gb = h2;
        r.fa = hb;
        r.fb = h2;
        return r;
    }
    Edge h = h2;
    // X sweep
    for (int t = 2; t <= q2; ++t) {
        Edge hn = replace_one(h, fr.X[t], fr.X[k - t + 1]);
        if (ctx.red(hn)) {
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h, {ut}, {ubar, vbar});
            if (!ctx.red(hp)) return blue_result(h, hp);
            return red_same(hp, hn);
        }
        h = hn;
    }
    // Y sweep
    for (int t = 1; t <= q2 - 1; ++t) {
        Edge hn = replace_one(h, fr.Y[k - t], fr.Y[t + 1]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Edge hp = partner(h, {vt}, {ubar, vbar});
            if (!ctx.red(hp)) return blue_result(h, hp);
            return red_same(hp, hn);
        }
        h = hn;
    }
    // swap Yk for ubar
    {
        Edge hn = replace_one(h, fr.Y[k], ubar);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Edge hp = partner(h, {vt}, {ubar, vbar});
            if (!ctx.red(hp)) return blue_result(h, hp);
            return red_same(hp, hn);
        }
        h = hn;
    }
    if (k % 2 == 1) {
        Edge h_prev = h;
        Edge hn = replace_one(h, fr.Y[(k + 1) / 2], fr.X[(k + 1) / 2]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), set_union(hn, h_prev));
            Edge hp = partner(h_prev, {vt}, {vbar});
            if (!ctx.red(hp)) return blue_result(hp, h_prev);
            return red_same(hp, hn);
        }
        h = hn;
    }
    return blue_result(h1, h);
}

// Mirror claim "g' is red" for stage Initial, run from a blue B-form seed
// (interiors: X high, Y low; seed carries ubar as its f-side link).
StageResult gpr4_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j,
                        Vertex x, Vertex w, Vertex vbar, Vertex ubar) {
    const int k = fr.k;
    const int q2 = k / 2;
    std::vector<Vertex> xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    std::sort(xints.begin(), xints.end());
    std::sort(yints.begin(), yints.end());
    (void)x;
    auto partner = [&](const Edge& base, std::vector<Vertex> excl, std::vector<Vertex> incl) {
        Edge core = frame_all(fr, {w});
        excl.push_back(fr.X[1]);
        excl.push_back(fr.Y[1]);
        core = set_minus(core, set_union(base, sorted(excl)));
        for (Vertex v : incl) core = set_union(core, Edge{v});
        if ((int)core.size() != k) throw ConstructionError("gpr4 partner has wrong size");
        return core;
    };
    auto blue_result = [&](const Edge& a, const Edge& b) {
        StageResult r;
        r.is_blue = true;
        r.blue = merge_or_throw(cfg, i, j, a, b);
        return r;
    };
    auto red_same = [&](const Edge& attach, const Edge& far) {
        StageResult r;
        r.ga = attach;
        r.gb = far;
        r.fa = attach;
        r.fb = far;
        return r;
    };

    Edge h1 = frame_edge(fr, rng(q2 + 1, k), rng(2, q2), {ubar});
    Edge h = h1;
    // X sweep: tops out, bottoms in
    for (int t = 2; t <= q2; ++t) {
        Edge hn = replace_one(h, fr.X[k - t + 1], fr.X[t]);
        if (ctx.red(hn)) {
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h, {ut}, {vbar});
            if (!ctx.red(hp)) return blue_result(hp, h);
            return red_same(hp, hn);
        }
        h = hn;
    }
    // Y sweep: bottoms out, tops in
    for (int t = 1; t <= q2 - 1; ++t) {
        Edge hn = replace_one(h, fr.Y[t + 1], fr.Y[k - t]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Edge hp = partner(h, {vt}, {vbar});
            if (!ctx.red(hp)) return blue_result(hp, h);
            return red_same(hp, hn);
        }
        h = hn;
    }
    // swap ubar for Yk
    {
        Edge hn = replace_one(h, ubar, fr.Y[k]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h, {vt}, {vbar});
            if (!ctx.red(hp)) return blue_result(hp, h);
            Edge hb = partner(h, {ut}, {vbar});
            if (!ctx.red(hb)) return blue_result(hb, h);
            StageResult r;
            r.ga = hp;
            r.gb = hn;
            r.fa = hb;
            r.fb = hn;
            return r;
        }
        h = hn;
    }
    Edge h_pre2 = h;  // blue, D-form
    // swap Xk for vbar
    {
        Edge hn = replace_one(h, fr.X[k], vbar);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h_pre2, {vt}, {ubar, vbar});
            if (!ctx.red(hp)) return blue_result(hp, h_pre2);
            Edge hb = partner(h_pre2, {ut}, {ubar, vbar});
            if (!ctx.red(hb)) return blue_result(hb, h_pre2);
            StageResult r;
            r.ga = hp;
            r.gb = hn;
            r.fa = hb;
            r.fb = hn;
            return r;
        }
        h = hn;
    }
    if (k % 2 == 1) {
        Edge h_prev = h;
        Edge hn = replace_one(h, fr.X[(k + 1) / 2], fr.Y[(k + 1) / 2]);
        if (ctx.red(hn)) {
            Vertex ut = pick_min_in(as_edge(yints), set_union(hn, h_prev));
            Edge hp = partner(h_prev, {ut}, {ubar});
            if (!ctx.red(hp)) return blue_result(hp, h_prev);
            return red_same(hp, hn);
        }
        h = hn;
    }
    return blue_result(h, h1);
}

// Claim "g is red" of the extension lemma (stage Step): seed
// h1 = {v} + X[2..k/2] + Y[k/2+1..k-1] + {Yk}.
StageResult gr2_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j,
                       Vertex v, Vertex up, Vertex u, Vertex w) {
    const int k = fr.k;
    const int q2 = k / 2;
    std::vector<Vertex> xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    std::sort(xints.begin(), xints.end());
    std::sort(yints.begin(), yints.end());
    auto partner = [&](const Edge& base, std::vector<Vertex> excl, std::vector<Vertex> incl) {
        Edge core = frame_all(fr, {w});
        excl.push_back(fr.X[1]);
        excl.push_back(fr.Y[1]);
        core = set_minus(core, set_union(base, sorted(excl)));
        for (Vertex vv : incl) core = set_union(core, Edge{vv});
        if ((int)core.size() != k) throw ConstructionError("gr2 partner has wrong size");
        return core;
    };
    auto blue_result = [&](const Edge& a, const Edge& b) {
        StageResult r;
        r.is_blue = true;
        r.blue = merge_or_throw(cfg, i, j, a, b);
        return r;
    };
    auto red_same = [&](const Edge& attach, const Edge& far, int which) {
        StageResult r;
        r.ga = attach;
        r.gb = far;
        r.fa = attach;
        r.fb = far;
        r.attach = which;
        return r;
    };

    Edge h1 = frame_edge(fr, rng(2, q2), rng(q2 + 1, k - 1), {v, fr.Y[k]});
    Edge h = h1;
    // X sweep: bottoms out, tops in (the pair stays A-form, link v kept)
    for (int t = 2; t <= q2; ++t) {
        Edge hn = replace_one(h, fr.X[t], fr.X[k - t + 1]);
        if (ctx.red(hn)) {
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h, {ut}, {up});
            if (!ctx.red(hp)) return blue_result(h, hp);
            return red_same(hn, hp, 1);
        }
        h = hn;
    }
    // Y sweep
    for (int t = 1; t <= q2 - 1; ++t) {
        Edge hn = replace_one(h, fr.Y[k - t], fr.Y[t + 1]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Edge hp = partner(h, {vt}, {up});
            if (!ctx.red(hp)) return blue_result(h, hp);
            return red_same(hn, hp, 1);
        }
        h = hn;
    }
    // swap v for Xk (D-form)
    {
        Edge h_prev = h;
        Edge hn = replace_one(h, v, fr.X[k]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h_prev, {vt}, {u});
            if (!ctx.red(hp)) return blue_result(h_prev, hp);
            Edge hb = partner(h_prev, {ut}, {u});
            if (!ctx.red(hb)) return blue_result(h_prev, hb);
            StageResult r;
            r.ga = hp;
            r.gb = hn;
            r.fa = hb;
            r.fb = hn;
            r.attach = 1;
            return r;
        }
        h = hn;
    }
    Edge h_m1 = h;
    // swap Yk for up (B-form)
    {
        Edge hn = replace_one(h, fr.Y[k], up);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Edge hp = partner(h_m1, {vt}, {v, up});
            if (!ctx.red(hp)) return blue_result(hp, h_m1);
            return red_same(hp, hn, 1);
        }
        h = hn;
    }
    if (k % 2 == 1) {
        Edge h_prev = h;
        Edge hn = replace_one(h, fr.Y[(k + 1) / 2], fr.X[(k + 1) / 2]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), set_union(hn, h_prev));
            Edge hp = partner(h_prev, {vt}, {v});
            if (!ctx.red(hp)) return blue_result(hp, h_prev);
            return red_same(hp, hn, 1);
        }
        h = hn;
    }
    return blue_result(h1, h);
}

// Mirror claim "g' is red" of the extension lemma: B-form seed with links
// (Xk, up); vp is a fresh e_{t-1} vertex outside the E path, uh comes from
// the E pair.
StageResult gpr2_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j,
                        Vertex v, Vertex up, Vertex uh, Vertex vp, Vertex w) {
    const int k = fr.k;
    const int q2 = k / 2;
    std::vector<Vertex> xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    std::sort(xints.begin(), xints.end());
    std::sort(yints.begin(), yints.end());
    auto partner = [&](const Edge& base, std::vector<Vertex> excl, std::vector<Vertex> incl) {
        Edge core = frame_all(fr, {w});
        excl.push_back(fr.X[1]);
        excl.push_back(fr.Y[1]);
        core = set_minus(core, set_union(base, sorted(excl)));
        for (Vertex vv : incl) core = set_union(core, Edge{vv});
        if ((int)core.size() != k) throw ConstructionError("gpr2 partner has wrong size");
        return core;
    };
    auto blue_result = [&](const Edge& a, const Edge& b) {
        StageResult r;
        r.is_blue = true;
        r.blue = merge_or_throw(cfg, i, j, a, b);
        return r;
    };
    auto red_same = [&](const Edge& attach, const Edge& far, int which) {
        StageResult r;
        r.ga = attach;
        r.gb = far;
        r.fa = attach;
        r.fb = far;
        r.attach = which;
        return r;
    };

    Edge h1 = frame_edge(fr, rng(q2 + 1, k), rng(2, q2), {up});
    Edge h = h1;
    // X sweep: tops out, bottoms in
    for (int t = 2; t <= q2; ++t) {
        Edge hn = replace_one(h, fr.X[k - t + 1], fr.X[t]);
        if (ctx.red(hn)) {
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h, {ut}, {v});
            if (!ctx.red(hp)) return blue_result(hp, h);
            return red_same(hp, hn, 1);
        }
        h = hn;
    }
    // Y sweep: bottoms out, tops in
    for (int t = 1; t <= q2 - 1; ++t) {
        Edge hn = replace_one(h, fr.Y[t + 1], fr.Y[k - t]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Edge hp = partner(h, {vt}, {v});
            if (!ctx.red(hp)) return blue_result(hp, h);
            return red_same(hp, hn, 1);
        }
        h = hn;
    }
    // swap up for Yk (D-form)
    {
        Edge h_prev = h;
        Edge hn = replace_one(h, up, fr.Y[k]);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h_prev, {vt}, {v});
            if (!ctx.red(hp)) return blue_result(hp, h_prev);
            Edge hb = partner(h_prev, {ut}, {v});
            if (!ctx.red(hb)) return blue_result(hb, h_prev);
            StageResult r;
            r.ga = hp;
            r.gb = hn;
            r.fa = hb;
            r.fb = hn;
            r.attach = 1;
            return r;
        }
        h = hn;
    }
    Edge h_m1 = h;
    // swap Xk for vp (A-form)
    {
        Edge hn = replace_one(h, fr.X[k], vp);
        if (ctx.red(hn)) {
            Vertex vt = pick_min_in(as_edge(xints), hn);
            Vertex ut = pick_min_in(as_edge(yints), hn);
            Edge hp = partner(h_m1, {vt}, {uh, vp});
            if (!ctx.red(hp)) return blue_result(hp, h_m1);
            Edge hb = partner(h_m1, {ut}, {uh, vp});
            if (!ctx.red(hb)) return blue_result(hb, h_m1);
            StageResult r;
            r.ga = hp;
            r.gb = hn;
            r.fa = hb;
            r.fb = hn;
            r.attach = 0;
            return r;
        }
        h = hn;
    }
    if (k % 2 == 1) {
        Edge h_prev = h;
        Edge hn = replace_one(h, fr.X[(k + 1) / 2], fr.Y[(k + 1) / 2]);
        if (ctx.red(hn)) {
            Vertex ut = pick_min_in(as_edge(yints), set_union(hn, h_prev));
            Edge hp = partner(h_prev, {ut}, {uh});
            if (!ctx.red(hp)) return blue_result(hp, h_prev);
            return red_same(hp, hn, 0);
        }
        h = hn;
    }
    return blue_result(h, h1);
}

std::optional<Vertex> try_pick(const Edge& pool) {
    if (pool.empty()) return std::nullopt;
    return pool.front();
}

}  // namespace

namespace detail {

LadderOutcome ladder_initial_impl(Ctx& ctx, const CycleConfiguration& cfg, int i0, int j0,
                                  const BranchPair& bp) {
    if (cfg.l1() < 3) throw InvalidInput("stage Initial needs l1 >= 3");
    if (bp.vbar == cfg.e_first(i0) || bp.vbar == cfg.e_last(i0) ||
        bp.ubar == cfg.f_first(j0) || bp.ubar == cfg.f_last(j0))
        throw InvalidInput("stage Initial: vbar/ubar must avoid the connection vertices");
    const int k = cfg.k();
    const int q2 = k / 2;
    int i = i0 + 1, j = j0 + 1;
    Edge g1 = bp.g1, g1p = bp.g1p;
    Edge diff = set_minus(g1p, g1);
    Edge eprev = cfg.e(i0);
    Edge x_pool = set_minus(set_inter(diff, eprev),
                            sorted({std::min(cfg.e_first(i0), cfg.e_last(i0)),
                                    std::max(cfg.e_first(i0), cfg.e_last(i0))}));
    auto xo = try_pick(x_pool);
    if (!xo) throw InvalidInput("stage Initial: no connection vertex in e_{i-1}");
    Vertex x = *xo;
    Edge Wset(cfg.W.begin(), cfg.W.end());
    Edge w_pool_v = set_inter(diff, Wset);
    if (w_pool_v.empty()) throw InvalidInput("stage Initial: (g1' \\ g1) carries no W vertex");
    Vertex w = w_pool_v.front();
    Vertex vbar = bp.vbar, ubar = bp.ubar;

    FrameSpec spec;
    spec.i = i;
    spec.j = j;
    Frame fr = build_frame(cfg, spec, nullptr);
    Edge h = frame_edge(fr, rng(2, q2), rng(q2 + 1, k - 1), {x, fr.Y[k]});
    std::vector<int> xp = {q2};
    for (int p : rng(q2 + 2, k)) xp.push_back(p);
    Edge g2p = frame_edge(fr, xp, rng(2, q2), {ubar});
    std::vector<int> yb = rng(2, q2 - 1);
    yb.push_back(q2 + 1);
    Edge g2b = frame_edge(fr, rng(q2 + 1, k), yb, {ubar});

    StageResult res;
    bool used = false;
    if (!ctx.red(h)) {
        Frame lf = build_frame(cfg, spec, &h);
        res = gr4_ladder(ctx, cfg, lf, i, j, x, w, vbar, ubar);
        used = true;
    } else if (!ctx.red(g2p)) {
        FrameSpec ls = spec;
        ls.h_x_low = false;
        ls.h_y_high = false;
        Frame lf = build_frame(cfg, ls, &g2p);
        res = gpr4_ladder(ctx, cfg, lf, i, j, x, w, vbar, ubar);
        used = true;
    } else if (!ctx.red(g2b)) {
        FrameSpec ls = spec;
        ls.h_x_low = false;
        ls.h_y_high = false;
        Frame lf = build_frame(cfg, ls, &g2b);
        res = gpr4_ladder(ctx, cfg, lf, i, j, x, w, vbar, ubar);
        used = true;
    }
    LadderOutcome out;
    if (used && res.is_blue) {
        assert_mono(cfg.coloring, res.blue->edges, Color::Blue, "stage Initial blue witness");
        out.blue_cycle = *res.blue;
        out.trace = ctx.trace;
        return out;
    }
    LadderState st;
    st.i0 = i0;
    st.j0 = j0;
    st.t = 2;
    st.common = {g1, g1p};
    if (used) {
        st.lastE = {res.ga, res.gb};
        st.lastF = {res.fa, res.fb};
    } else {
        st.lastE = {h, g2p};
        st.lastF = {h, g2b};
    }
    for (Vertex wv : cfg.W)
        if (set_contains(set_union(set_union(st.lastE.a, st.lastE.b),
                                   set_union(st.lastF.a, st.lastF.b)),
                         wv) ||
            set_contains(set_union(g1, g1p), wv))
            st.B_union.push_back(wv);
    std::string bad = check_ladder_state(cfg, st);
    if (!bad.empty()) throw ConstructionError("stage Initial output violates " + bad);
    assert_mono(cfg.coloring, st.Epath(), Color::Red, "stage Initial E path");
    assert_mono(cfg.coloring, st.Fpath(), Color::Red, "stage Initial F path");
    out.state = std::move(st);
    out.trace = ctx.trace;
    return out;
}

LadderOutcome ladder_step_impl(Ctx& ctx, const CycleConfiguration& cfg, const LadderState& st) {
    const int k = cfg.k();
    const int q2 = k / 2;
    int t = st.t + 1;
    if (t > std::min(cfg.l1(), cfg.l2())) throw InvalidInput("ladder ran out of cycle edges");
    int i = st.i0 + t - 1, j = st.j0 + t - 1;
    Edge eprev = cfg.e(i - 1), fprev = cfg.f(j - 1);
    Vertex efirst = cfg.e_first(i - 1), ffirst = cfg.f_first(j - 1);

    std::vector<Edge> Epath = st.Epath(), Fpath = st.Fpath();
    Edge Everts, Fverts;
    for (const Edge& e : Epath) Everts = set_union(Everts, e);
    for (const Edge& e : Fpath) Fverts = set_union(Fverts, e);

    Edge dF = set_minus(st.lastF.b, st.lastF.a);
    Edge dE = set_minus(st.lastE.b, st.lastE.a);
    Edge e_ends = sorted({std::min(efirst, cfg.e_last(i - 1)), std::max(efirst, cfg.e_last(i - 1))});
    Edge f_ends = sorted({std::min(ffirst, cfg.f_last(j - 1)), std::max(ffirst, cfg.f_last(j - 1))});
    auto vo = try_pick(set_minus(set_inter(dF, eprev), e_ends));
    auto uo = try_pick(set_minus(set_inter(dF, fprev), f_ends));
    auto uho = try_pick(set_minus(set_inter(dE, fprev), f_ends));
    if (!vo || !uo || !uho) throw InvalidInput("ladder step: P2 connection vertices missing");
    Vertex v = *vo, u = *uo, uh = *uho;
    Vertex up = pick_min_in(set_minus(fprev, Edge{ffirst}), Fverts);
    Vertex vp = pick_min_in(set_minus(eprev, Edge{efirst}), Everts);
    Edge Wset(cfg.W.begin(), cfg.W.end());
    Vertex w = pick_min_in(Wset, sorted(st.B_union));

    FrameSpec spec;
    spec.i = i;
    spec.j = j;
    Frame fr = build_frame(cfg, spec, nullptr);
    Edge gi = frame_edge(fr, rng(2, q2), rng(q2 + 1, k - 1), {v, fr.Y[k]});
    std::vector<int> xp = {q2};
    for (int p : rng(q2 + 2, k)) xp.push_back(p);
    Edge gip = frame_edge(fr, xp, rng(2, q2), {up});
    std::vector<int> yb = rng(2, q2 - 1);
    yb.push_back(q2 + 1);
    Edge gib = frame_edge(fr, rng(q2 + 1, k), yb, {up});

    StageResult res;
    bool used = false;
    if (!ctx.red(gi)) {
        Frame lf = build_frame(cfg, spec, &gi);
        res = gr2_ladder(ctx, cfg, lf, i, j, v, up, u, w);
        used = true;
    } else if (!ctx.red(gip)) {
        FrameSpec ls = spec;
        ls.h_x_low = false;
        ls.h_y_high = false;
        Frame lf = build_frame(cfg, ls, &gip);
        res = gpr2_ladder(ctx, cfg, lf, i, j, v, up, uh, vp, w);
        used = true;
    } else if (!ctx.red(gib)) {
        FrameSpec ls = spec;
        ls.h_x_low = false;
        ls.h_y_high = false;
        Frame lf = build_frame(cfg, ls, &gib);
        res = gpr2_ladder(ctx, cfg, lf, i, j, v, up, uh, vp, w);
        used = true;
    }
    LadderOutcome out;
    if (used && res.is_blue) {
        assert_mono(cfg.coloring, res.blue->edges, Color::Blue, "ladder step blue witness");
        out.blue_cycle = *res.blue;
        out.trace = ctx.trace;
        return out;
    }
    LadderState ns;
    ns.i0 = st.i0;
    ns.j0 = st.j0;
    ns.t = t;
    PathPair newE = used ? PathPair{res.ga, res.gb} : PathPair{gi, gip};
    PathPair newF = used ? PathPair{res.fa, res.fb} : PathPair{gi, gib};
    int attach = used ? res.attach : 1;  // the favorable pair extends the F path
    ns.common = attach == 0 ? Epath : Fpath;
    ns.lastE = newE;
    ns.lastF = newF;
    ns.B_union = st.B_union;
    Edge newverts = set_union(set_union(newE.a, newE.b), set_union(newF.a, newF.b));
    for (Vertex wv : cfg.W)
        if (set_contains(newverts, wv) &&
            std::find(ns.B_union.begin(), ns.B_union.end(), wv) == ns.B_union.end())
            ns.B_union.push_back(wv);
    std::string bad = check_ladder_state(cfg, ns);
    if (!bad.empty()) throw ConstructionError("ladder step output violates " + bad);
    assert_mono(cfg.coloring, ns.Epath(), Color::Red, "ladder step E path");
    assert_mono(cfg.coloring, ns.Fpath(), Color::Red, "ladder step F path");
    out.state = std::move(ns);
    out.trace = ctx.trace;
    return out;
}

namespace {

// Stage Final fallback when the favorable A-form edge is red but its B-form
// mate is blue: sweep B-form mates that each share exactly one vertex with
// g1. A red mate closes the pair; a blue mate is answered by probing its
// disjoint A-form complement, which merges on blue.
detail::P2Result final_family_sweep(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr,
                                    int i, int j, const Edge& g1, Vertex econn, Vertex efresh,
                                    Vertex ffresh, Vertex upfresh) {
    const int k = fr.k;
    const int q2 = k / 2;
    Edge xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    xints = sorted(xints);
    yints = sorted(yints);
    Edge xbot, xtop, ybot, ytop;
    for (int p = 2; p <= q2; ++p) xbot.push_back(fr.X[p]);
    for (int p = q2 + 1; p <= k - 1; ++p) xtop.push_back(fr.X[p]);
    for (int p = 2; p <= q2; ++p) ybot.push_back(fr.Y[p]);
    for (int p = q2 + 1; p <= k - 1; ++p) ytop.push_back(fr.Y[p]);
    xbot = sorted(xbot);
    xtop = sorted(xtop);
    ybot = sorted(ybot);
    ytop = sorted(ytop);

    auto try_member = [&](const Edge& bs) -> std::optional<detail::P2Result> {
        if (ctx.red(bs)) {
            detail::P2Result r;
            r.ga = g1;
            r.gb = bs;
            return r;
        }
        Edge as = sorted({econn, ffresh});
        as = set_union(as, set_minus(xints, bs));
        as = set_union(as, set_minus(yints, bs));
        if ((int)as.size() != k) throw ConstructionError("final sweep complement size");
        if (!ctx.red(as)) {
            detail::P2Result r;
            r.is_blue = true;
            r.blue = merge_blue(cfg, i, j, as, bs);
            return r;
        }
        return std::nullopt;
    };

    // share an X interior of g1: e side carries the share + top interiors
    for (Vertex share : xbot)
        for (Vertex drop : xtop) {
            std::vector<Vertex> vs = {share, efresh, upfresh};
            for (Vertex x : xtop)
                if (x != drop) vs.push_back(x);
            for (Vertex y : ybot) vs.push_back(y);
            if ((int)vs.size() != k) continue;
            if (auto r = try_member(sorted(vs))) return *r;
        }
    // share a Y interior of g1: f side carries the share + bottom interiors
    for (Vertex share : ytop)
        for (Vertex drop : ybot) {
            std::vector<Vertex> vs = {share, efresh, upfresh};
            for (Vertex x : xtop) vs.push_back(x);
            for (Vertex y : ybot)
                if (y != drop) vs.push_back(y);
            if ((int)vs.size() != k) continue;
            if (auto r = try_member(sorted(vs))) return *r;
        }
    throw ConstructionError("stage Final: family sweep exhausted");
}

}  // namespace

namespace {
struct PoolMissing {};
}  // namespace

LadderOutcome ladder_final_impl(Ctx& ctx, const CycleConfiguration& cfg, const LadderState& st,
                                Vertex v, Vertex u) {
    int t = st.t + 1;
    if (t > std::min(cfg.l1(), cfg.l2())) throw InvalidInput("ladder ran out of cycle edges");
    int i = st.i0 + t - 1, j = st.j0 + t - 1;
    std::vector<Edge> Epath = st.Epath(), Fpath = st.Fpath();
    Edge Everts, Fverts;
    for (const Edge& e : Epath) Everts = set_union(Everts, e);
    for (const Edge& e : Fpath) Fverts = set_union(Fverts, e);
    Edge allverts = set_union(Everts, Fverts);
    if (!set_contains(cfg.e(i + 1), v) || v == cfg.e_last(i + 1))
        throw InvalidInput("stage Final: v must lie in e_{i+1} minus its last vertex");
    if (!set_contains(cfg.f(j + 1), u) || u == cfg.f_last(j + 1))
        throw InvalidInput("stage Final: u must lie in f_{j+1} minus its last vertex");
    if (v == u || set_contains(allverts, v) || set_contains(allverts, u))
        throw InvalidInput("stage Final: v,u must be fresh and distinct");

    // the pair may extend either path; anchor on F first, then E
    auto attempt = [&](const PathPair& lastP, const Edge& Pverts) {
        Edge dP = set_minus(lastP.b, lastP.a);
        Edge e_ends = sorted({std::min(cfg.e_first(i - 1), cfg.e_last(i - 1)),
                              std::max(cfg.e_first(i - 1), cfg.e_last(i - 1))});
        Edge f_ends = sorted({std::min(cfg.f_first(j - 1), cfg.f_last(j - 1)),
                              std::max(cfg.f_first(j - 1), cfg.f_last(j - 1))});
        auto vc = try_pick(set_minus(set_inter(dP, cfg.e(i - 1)), e_ends));
        auto uc = try_pick(set_minus(set_inter(dP, cfg.f(j - 1)), f_ends));
        if (!vc || !uc) throw PoolMissing{};
        Vertex econn = *vc, fconn = *uc;
        auto upo = try_pick(set_minus(set_minus(cfg.f(j - 1), Edge{cfg.f_first(j - 1)}), Pverts));
        if (!upo) throw PoolMissing{};
        Vertex upfresh = *upo;

        FrameSpec spec;
        spec.i = i;
        spec.j = j;
        spec.vP = econn;
        spec.vN = v;
        spec.uP = upfresh;
        spec.uN = u;
        Frame fr = build_frame(cfg, spec, nullptr);
        detail::P2Result r;
        Edge g1 = p2_h1(fr, 0);
        Edge g2 = p2_g2(fr, 0, 0);
        if (!ctx.red(g1)) {
            Frame lf = build_frame(cfg, spec, &g1);
            r = p2_ladder(ctx, cfg, lf, i, j, P2Mode::Final, 0, 0, fconn);
        } else if (!ctx.red(g2)) {
            r = final_family_sweep(ctx, cfg, fr, i, j, g1, econn, v, u, upfresh);
        } else {
            r.ga = g1;
            r.gb = g2;
        }
        return std::make_pair(r, std::vector<Vertex>{v, u, econn, fconn, upfresh});
    };

    std::pair<detail::P2Result, std::vector<Vertex>> got;
    try {
        got = attempt(st.lastF, Fverts);
    } catch (const PoolMissing&) {
        try {
            got = attempt(st.lastE, Everts);
        } catch (const PoolMissing&) {
            throw ConstructionError("stage Final: neither path leaves link room");
        }
    }
    auto& r = got.first;
    LadderOutcome out;
    if (r.is_blue) {
        assert_mono(cfg.coloring, r.blue->edges, Color::Blue, "stage Final blue witness");
        out.blue_cycle = *r.blue;
        out.trace = ctx.trace;
        return out;
    }
    // conditions: containment and the >=2 interior overlaps; the v'/u' slots
    // are existential, so any e_{i-1}/f_{j-1} vertex is an admissible slot
    Edge inner_e = cfg.e_interior(i), inner_f = cfg.f_interior(j);
    Edge prev_sides = set_union(set_minus(cfg.e(i - 1), Edge{cfg.e_first(i - 1)}),
                                set_minus(cfg.f(j - 1), Edge{cfg.f_first(j - 1)}));
    Edge allowed = set_union(set_union(set_union(inner_e, inner_f), prev_sides),
                             sorted({std::min(v, u), std::max(v, u)}));
    for (Vertex vv : set_union(r.ga, r.gb))
        if (!set_contains(allowed, vv))
            throw ConstructionError("stage Final: vertex outside the allowed universe");
    Edge d = set_minus(r.gb, r.ga);
    if (set_inter(d, inner_e).size() < 2 || set_inter(d, inner_f).size() < 2)
        throw ConstructionError("stage Final: interior overlap below 2");
    // attach to whichever path accepts the pair
    for (const std::vector<Edge>* P : {&Epath, &Fpath}) {
        for (int ord = 0; ord < 2; ++ord) {
            std::vector<Edge> cand = *P;
            cand.push_back(ord == 0 ? r.ga : r.gb);
            cand.push_back(ord == 0 ? r.gb : r.ga);
            auto resv = validate(cand, StructureKind::Path);
            if (!resv.ok) continue;
            assert_mono(cfg.coloring, cand, Color::Red, "stage Final path");
            out.final_path = ordered_path(cand);
            out.trace = ctx.trace;
            return out;
        }
    }
    throw ConstructionError("stage Final: pair attaches to neither path");
}

}  // namespace detail

LadderOutcome ladder_initial(const CycleConfiguration& cfg, int i0, int j0, const BranchPair& bp) {
    Ctx ctx(cfg.coloring);
    return detail::ladder_initial_impl(ctx, cfg, i0, j0, bp);
}

LadderOutcome ladder_step(const CycleConfiguration& cfg, const LadderState& st) {
    Ctx ctx(cfg.coloring);
    return detail::ladder_step_impl(ctx, cfg, st);
}

LadderOutcome ladder_final(const CycleConfiguration& cfg, const LadderState& st, Vertex v,
                           Vertex u) {
    Ctx ctx(cfg.coloring);
    return detail::ladder_final_impl(ctx, cfg, st, v, u);
}

std::string check_ladder_state(const CycleConfiguration& cfg, const LadderState& st) {
    auto rE = validate(st.Epath(), StructureKind::Path);
    auto rF = validate(st.Fpath(), StructureKind::Path);
    if (!rE.ok) return "E path invalid: " + rE.reason;
    if (!rF.ok) return "F path invalid: " + rF.reason;
    if ((int)st.Epath().size() != 2 * st.t) return "E path has wrong length";
    int t = st.t;
    int i = st.i0 + t - 1, j = st.j0 + t - 1;
    const Edge& et = cfg.e(i);
    const Edge& ft = cfg.f(j);
    Edge Wset(cfg.W.begin(), cfg.W.end());
    // P1 for the last pair
    Edge U = set_union(set_union(st.lastE.a, st.lastE.b), set_union(st.lastF.a, st.lastF.b));
    int vhat = 0, uhat = 0;
    for (Vertex vv : U) {
        if (set_contains(et, vv) && vv != cfg.e_first(i)) continue;
        if (set_contains(ft, vv) && vv != cfg.f_first(j)) continue;
        if (set_contains(Wset, vv)) continue;
        if (set_contains(cfg.e(i - 1), vv) && vv != cfg.e_first(i - 1)) {
            if (++vhat > 1) return "P1: more than one hat v";
            continue;
        }
        if (set_contains(cfg.f(j - 1), vv) && vv != cfg.f_first(j - 1)) {
            if (++uhat > 1) return "P1: more than one hat u";
            continue;
        }
        return "P1: vertex " + std::to_string(vv) + " outside the step universe";
    }
    // P2 for the last pair
    Edge Ev = set_union(st.lastE.a, st.lastE.b), Fv = set_union(st.lastF.a, st.lastF.b);
    if (set_minus(set_minus(et, Ev), Edge{cfg.e_first(i)}).empty()) return "P2: e_t leftover";
    if (set_minus(set_minus(ft, Fv), Edge{cfg.f_first(j)}).empty()) return "P2: f_t leftover";
    Edge inner_e = cfg.e_interior(i), inner_f = cfg.f_interior(j);
    Edge dE = set_minus(st.lastE.b, st.lastE.a), dF = set_minus(st.lastF.b, st.lastF.a);
    if (set_inter(dE, inner_e).empty() || set_inter(dE, inner_f).empty())
        return "P2: E pair interior overlap";
    if (set_inter(dF, inner_e).empty() || set_inter(dF, inner_f).empty())
        return "P2: F pair interior overlap";
    return "";
}

// ---- half-cycle pipelines ---------------------------------------------------------

namespace {

Outcome outcome_blue(Ctx& ctx, const CycleConfiguration& cfg, LooseCycle cyc) {
    Outcome out;
    out.kind = Outcome::Kind::BlueCycle;
    assert_mono(cfg.coloring, cyc.edges, Color::Blue, "half-cycle blue witness");
    out.blue_cycle = std::move(cyc);
    out.trace = ctx.trace;
    return out;
}

Outcome outcome_blue_edges(Ctx& ctx, const CycleConfiguration& cfg, std::vector<Edge> edges) {
    return outcome_blue(ctx, cfg, ordered_cycle(edges));
}

Outcome outcome_red(Ctx& ctx, const CycleConfiguration& cfg, std::vector<Edge> edges) {
    Outcome out;
    out.kind = Outcome::Kind::RedCycle;
    out.red_cycle = ordered_cycle(edges);
    assert_mono(cfg.coloring, out.red_cycle->edges, Color::Red, "half-cycle red witness");
    out.trace = ctx.trace;
    return out;
}

// cyclic runs of cfg cycle edges, 1-based start/stop inclusive
std::vector<Edge> e_run(const CycleConfiguration& cfg, int from, int to) {
    std::vector<Edge> out;
    int n = cfg.l1();
    for (int t = from; ; ++t) {
        out.push_back(cfg.e(t - 1));
        if (wrap(t - 1, n) == wrap(to - 1, n)) break;
    }
    return out;
}

std::vector<Edge> f_run(const CycleConfiguration& cfg, int from, int to) {
    std::vector<Edge> out;
    int n = cfg.l2();
    for (int t = from; ; ++t) {
        out.push_back(cfg.f(t - 1));
        if (wrap(t - 1, n) == wrap(to - 1, n)) break;
    }
    return out;
}

}  // namespace

Outcome half_cycle_odd(const KUniformColoring& c, const LooseCycle& C1in, const LooseCycle& C2in) {
    const int k = c.k();
    if (k < 8) throw InvalidInput("half_cycle_odd needs k >= 8");
    CycleConfiguration cfg = make_configuration(c, C1in, C2in);
    const int l1 = cfg.l1(), l2 = cfg.l2();
    const int n = l1 + l2;
    if (n < 5 || n % 2 == 0 || l2 != l1 + 1)
        throw InvalidInput("half_cycle_odd needs cycles of lengths (n-1)/2 and (n+1)/2");
    if (c.N() != (k - 1) * n + (n - 1) / 2)
        throw InvalidInput("half_cycle_odd needs exactly (k-1)n + (n-1)/2 vertices");
    Ctx ctx(c);
    auto V = [&](long long p) { return cfg.C1.at(p); };
    auto U = [&](long long p) { return cfg.C2.at(p); };

    if (n == 5) {
        P2Hypothesis hyp;
        hyp.i = 0;
        hyp.j = 0;
        hyp.C = V(k - 1);
        hyp.w1 = cfg.W[0];
        hyp.w2 = cfg.W[1];
        hyp.vprev = V(1);
        hyp.uprev = U(1);
        hyp.vnext = V(k);
        hyp.unext = U(k);
        hyp.leftover_side = 1;
        Outcome sub = red_pair_path_impl(ctx, cfg, hyp);
        if (sub.kind == Outcome::Kind::BlueCycle) {
            sub.trace = ctx.trace;
            return sub;
        }
        Edge g1 = sub.red_path->edges[0], g2 = sub.red_path->edges[1];
        Vertex wa = -1;
        for (Vertex wv : cfg.W)
            if (set_contains(g1, wv) && !set_contains(g2, wv)) wa = wv;
        if (wa < 0) throw ConstructionError("half_cycle_odd n=5: no W vertex in g1");
        Vertex x1 = pick_min_in(set_minus(set_inter(set_minus(g1, g2), cfg.e(0)), Edge{V(1)}), {});
        Vertex y1 = pick_min_in(set_minus(set_inter(set_minus(g2, g1), cfg.f(0)), Edge{U(k)}), {});
        Vertex x2 = pick_min_in(set_minus(set_inter(set_minus(g2, g1), cfg.e(0)), Edge{V(k)}), {});
        Edge h = set_union(set_minus(cfg.e(1), sorted({V(k), V(2 * k - 2), V(1)})),
                           sorted({x1, U(3 * k - 3), y1}));
        Edge hp = set_union(set_minus(cfg.f(2), sorted({U(3 * k - 4), U(3 * k - 3), U(1)})),
                            sorted({wa, V(2 * k - 2), x2}));
        if (ctx.red(h)) return outcome_red(ctx, cfg, {g1, g2, h});
        if (ctx.red(hp)) return outcome_red(ctx, cfg, {g1, g2, hp});
        return outcome_blue_edges(ctx, cfg, {cfg.e(0), h, cfg.f(0), cfg.f(1), hp});
    }

    // n >= 7
    P2Hypothesis hyp;
    hyp.i = 0;
    hyp.j = 0;
    hyp.w1 = cfg.W[0];
    hyp.w2 = cfg.W[1];
    hyp.vprev = V(1);
    hyp.uprev = U(1);
    hyp.vnext = V(k);
    hyp.unext = U(k);
    hyp.leftover_side = 1;
    Outcome sub = red_pair_path_impl(ctx, cfg, hyp);
    if (sub.kind == Outcome::Kind::BlueCycle) {
        sub.trace = ctx.trace;
        return sub;
    }
    std::vector<Edge> P = {sub.red_path->edges[0], sub.red_path->edges[1]};
    auto g = [&](int idx) -> const Edge& { return P[idx - 1]; };  // 1-based

    // Step 2
    for (int t = 1; t <= (n - 7) / 2; ++t) {
        Edge de = set_minus(g(t + 1), g(t));
        Vertex x =
            pick_by_pos(cfg.C1, set_minus(set_inter(de, cfg.e(t - 1)), Edge{cfg.e_first(t - 1)}),
                        true);
        Vertex y =
            pick_by_pos(cfg.C2, set_minus(set_inter(de, cfg.f(t - 1)), Edge{cfg.f_first(t - 1)}),
                        true);
        Edge h = set_union(
            set_minus(cfg.e(t), sorted({cfg.e_first(t), V((long long)(t + 1) * (k - 1)),
                                        cfg.e_last(t)})),
            sorted({x, U((long long)(t + 1) * (k - 1)), cfg.f_last(t)}));
        Edge hp = set_union(
            set_minus(cfg.f(t), sorted({cfg.f_first(t), U((long long)(t + 1) * (k - 1)),
                                        cfg.f_last(t)})),
            sorted({y, V((long long)(t + 1) * (k - 1)), cfg.e_last(t)}));
        if (ctx.red(h)) {
            P.push_back(h);
        } else if (ctx.red(hp)) {
            P.push_back(hp);
        } else {
            std::vector<Edge> blue = {hp};
            auto er = e_run(cfg, t + 2, t);
            blue.insert(blue.end(), er.begin(), er.end());
            blue.push_back(h);
            auto frn = f_run(cfg, t + 2, t);
            blue.insert(blue.end(), frn.begin(), frn.end());
            return outcome_blue_edges(ctx, cfg, blue);
        }
    }

    // Step 3: P now has (n-3)/2 edges
    const int M1 = (n - 3) / 2;
    {
        Edge d_last = set_minus(g(M1), g(M1 - 1));
        Vertex x_a = pick_by_pos(
            cfg.C1, set_minus(set_inter(set_minus(g(1), g(2)), cfg.e(0)), Edge{V(k)}), false);
        Vertex y_a = pick_by_pos(
            cfg.C2, set_minus(set_inter(d_last, cfg.f(M1 - 2)), Edge{cfg.f_first(M1 - 2)}), true);
        Edge h_a = set_union(
            set_minus(cfg.e(l1 - 1), sorted({cfg.e_first(l1 - 1),
                                             V((long long)M1 * (k - 1) + 2), V(1)})),
            sorted({x_a, U((long long)M1 * (k - 1)), cfg.f_last(M1 - 1)}));
        Edge hp_a = set_union(
            set_minus(cfg.f(M1 - 1), sorted({cfg.f_first(M1 - 1), U((long long)M1 * (k - 1)),
                                             cfg.f_last(M1 - 1)})),
            sorted({y_a, cfg.e_first(l1 - 1), V((long long)M1 * (k - 1) + 2)}));
        if (ctx.red(h_a)) {
            Edge d2 = set_minus(g(M1), g(M1 - 1));
            Vertex x_b = pick_min_in(
                set_minus(set_inter(d2, cfg.e(M1 - 2)), Edge{cfg.e_first(M1 - 2)}), {});
            Vertex y_b = pick_min_in(
                set_minus(set_inter(d2, cfg.f(M1 - 2)), Edge{cfg.f_first(M1 - 2)}), {});
            Edge h_b = set_union(
                set_minus(cfg.e(M1 - 1), sorted({cfg.e_first(M1 - 1),
                                                 V((long long)M1 * (k - 1)), cfg.e_last(M1 - 1)})),
                sorted({x_b, U((long long)(M1 - 1) * (k - 1) + k - 2), cfg.f_last(M1 - 1)}));
            if (ctx.red(h_b)) {
                std::vector<Edge> red = P;
                red.push_back(h_b);
                red.push_back(h_a);
                return outcome_red(ctx, cfg, red);
            }
            Edge hp_b = set_union(
                set_minus(cfg.f(M1 - 1), sorted({cfg.f_first(M1 - 1),
                                                 U((long long)(M1 - 1) * (k - 1) + k - 2),
                                                 cfg.f_last(M1 - 1)})),
                sorted({y_b, V((long long)M1 * (k - 1)), cfg.e_last(M1 - 1)}));
            if (ctx.red(hp_b)) {
                std::vector<Edge> red = P;
                red.push_back(hp_b);
                red.push_back(h_a);
                return outcome_red(ctx, cfg, red);
            }
            std::vector<Edge> blue = {hp_b};
            auto er = e_run(cfg, M1 + 1, M1 - 1);
            blue.insert(blue.end(), er.begin(), er.end());
            blue.push_back(h_b);
            auto frn = f_run(cfg, M1 + 1, M1 - 1);
            blue.insert(blue.end(), frn.begin(), frn.end());
            return outcome_blue_edges(ctx, cfg, blue);
        }
        if (!ctx.red(hp_a)) {
            std::vector<Edge> blue = e_run(cfg, 1, M1);
            blue.push_back(hp_a);
            for (int s = M1 - 1; s >= 1; --s) blue.push_back(cfg.f(s - 1));
            blue.push_back(cfg.f(l2 - 1));
            blue.push_back(cfg.f(l2 - 2));
            blue.push_back(h_a);
            return outcome_blue_edges(ctx, cfg, blue);
        }
        // hp_a red: close through f_{(n+1)/2}
        Vertex y_c = pick_by_pos(
            cfg.C2, set_minus(set_inter(set_minus(g(1), g(2)), cfg.f(0)), Edge{U(k)}), false);
        Vertex x_c = pick_by_pos(
            cfg.C1, set_minus(set_inter(set_minus(g(1), g(2)), cfg.e(0)), Edge{V(k)}), false);
        Edge h_c = set_union(
            set_minus(cfg.e(l1 - 1), sorted({V((long long)M1 * (k - 1) + 2), V(1)})),
            sorted({U((long long)l2 * (k - 1)), y_c}));
        Edge hp_c = set_union(
            set_minus(cfg.f(l2 - 1), sorted({U((long long)l2 * (k - 1)), U(1)})),
            sorted({V((long long)M1 * (k - 1) + 2), x_c}));
        if (ctx.red(h_c)) {
            std::vector<Edge> red = P;
            red.push_back(hp_a);
            red.push_back(h_c);
            return outcome_red(ctx, cfg, red);
        }
        if (ctx.red(hp_c)) {
            std::vector<Edge> red = P;
            red.push_back(hp_a);
            red.push_back(hp_c);
            return outcome_red(ctx, cfg, red);
        }
        std::vector<Edge> blue = e_run(cfg, 1, M1);
        blue.push_back(h_c);
        auto frn = f_run(cfg, 1, l2 - 1);
        blue.insert(blue.end(), frn.begin(), frn.end());
        blue.push_back(hp_c);
        return outcome_blue_edges(ctx, cfg, blue);
    }
}

namespace {

// claim "g is red" of the n=6 even pipeline
struct N6Result {
    bool is_blue = false;
    std::optional<LooseCycle> blue;
    std::optional<std::vector<Edge>> red_cycle;  // the full C_4
};

N6Result n6_g_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j,
                     const Edge& g1, const Edge& g2, Vertex x, Vertex xp, Vertex y, Vertex yp,
                     Vertex vC, Vertex wa) {
    const int k = fr.k;
    const int q2 = k / 2;
    std::vector<Vertex> xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    std::sort(xints.begin(), xints.end());
    std::sort(yints.begin(), yints.end());
    std::vector<Edge> blues;
    auto partner_core = [&](const Edge& base, std::vector<Vertex> excl, std::vector<Vertex> incl) {
        Edge core = frame_all(fr, {});
        excl.push_back(fr.X[1]);
        excl.push_back(fr.X[k]);
        excl.push_back(fr.Y[1]);
        core = set_minus(core, set_union(base, sorted(excl)));
        for (Vertex vv : incl) core = set_union(core, Edge{vv});
        if ((int)core.size() != k) throw ConstructionError("n6 partner has wrong size");
        return core;
    };
    auto blue_result = [&](const Edge& a, const Edge& b) {
        N6Result r;
        r.is_blue = true;
        r.blue = merge_or_throw(cfg, i, j, a, b);
        return r;
    };
    auto red_result = [&](const Edge& third, const Edge& fourth) {
        N6Result r;
        r.red_cycle = std::vector<Edge>{g1, g2, third, fourth};
        return r;
    };

    Edge h1 = frame_edge(fr, rng(2, q2), rng(q2 + 1, k - 1), {x, fr.Y[k]});
    Edge h = h1;
    blues.push_back(h1);
    for (int t = 2; t <= q2; ++t) {
        Edge hn = replace_one(h, fr.X[t], fr.X[k - t + 1]);
        if (ctx.red(hn)) {
            Edge hp = partner_core(h, {}, {y, xp});
            if (!ctx.red(hp)) return blue_result(h, hp);
            return red_result(hn, hp);
        }
        h = hn;
        blues.push_back(h);
    }
    for (int t = 1; t <= q2 - 1; ++t) {
        Edge hn = replace_one(h, fr.Y[k - t], fr.Y[t + 1]);
        if (ctx.red(hn)) {
            Edge hp = partner_core(h, {}, {y, xp});
            if (!ctx.red(hp)) return blue_result(h, hp);
            return red_result(hn, hp);
        }
        h = hn;
        blues.push_back(h);
    }
    // double swap: {x, Yk} out, {vC, yp} in
    Edge h_pre = h;
    {
        Edge hn = set_union(set_minus(h, sorted({x, fr.Y[k]})), sorted({vC, yp}));
        if (ctx.red(hn)) {
            Vertex ut = pick_min_in(as_edge(yints), h_pre);
            Edge hp = partner_core(h_pre, {ut}, {y, vC, wa});
            if (!ctx.red(hp)) return blue_result(h_pre, hp);
            return red_result(hn, hp);
        }
        h = hn;
        blues.push_back(h);
    }
    if (k % 2 == 0) return blue_result(h1, h);
    // k odd: swap the common f-interior for the free e-interior
    Edge h_prev = h;
    Edge hn = replace_one(h, fr.Y[q2 + 1], fr.X[q2 + 1]);
    if (ctx.red(hn)) {
        Vertex ut = pick_min_in(as_edge(yints), h_prev);
        Edge q = partner_core(h_prev, {ut}, {y, wa});
        if (!ctx.red(q)) return {true, merge_with_any(cfg, i, j, q, blues), std::nullopt};
        return red_result(hn, q);
    }
    return blue_result(h1, hn);
}

N6Result n6_gp_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j,
                      const Edge& g1, const Edge& g2, Vertex x, Vertex xp, Vertex y, Vertex yp,
                      Vertex vC, Vertex wa) {
    const int k = fr.k;
    const int q2 = k / 2;
    std::vector<Vertex> xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    std::sort(xints.begin(), xints.end());
    std::sort(yints.begin(), yints.end());
    auto partner_core = [&](const Edge& base, std::vector<Vertex> excl, std::vector<Vertex> incl) {
        Edge core = frame_all(fr, {});
        excl.push_back(fr.X[1]);
        excl.push_back(fr.X[k]);
        excl.push_back(fr.Y[1]);
        core = set_minus(core, set_union(base, sorted(excl)));
        for (Vertex vv : incl) core = set_union(core, Edge{vv});
        if ((int)core.size() != k) throw ConstructionError("n6 mirror partner has wrong size");
        return core;
    };
    auto blue_result = [&](const Edge& a, const Edge& b) {
        N6Result r;
        r.is_blue = true;
        r.blue = merge_or_throw(cfg, i, j, a, b);
        return r;
    };
    auto red_result = [&](const Edge& third, const Edge& fourth) {
        N6Result r;
        r.red_cycle = std::vector<Edge>{g1, g2, third, fourth};
        return r;
    };

    // seed: X tops + x' on the e side, y + Y bottoms on the f side
    Edge h1 = frame_edge(fr, rng(q2 + 1, k - 1), rng(2, q2), {xp, y});
    Edge h = h1;
    for (int t = 1; t <= q2 - 1; ++t) {
        Edge hn = replace_one(h, fr.X[k - t], fr.X[t + 1]);
        if (ctx.red(hn)) {
            Edge hp = partner_core(h, {}, {x});
            if (!ctx.red(hp)) return blue_result(hp, h);
            return red_result(hp, hn);
        }
        h = hn;
    }
    for (int t = 2; t <= q2; ++t) {
        Edge hn = replace_one(h, fr.Y[t], fr.Y[k - t + 1]);
        if (ctx.red(hn)) {
            Edge hp = partner_core(h, {}, {x});
            if (!ctx.red(hp)) return blue_result(hp, h);
            return red_result(hp, hn);
        }
        h = hn;
    }
    // swap y for Yk
    {
        Edge h_prev = h;
        Edge hn = replace_one(h, y, fr.Y[k]);
        if (ctx.red(hn)) {
            Edge hp = partner_core(h_prev, {}, {x});
            if (!ctx.red(hp)) return blue_result(hp, h_prev);
            return red_result(hp, hn);
        }
        h = hn;
    }
    // swap {x', top-of-bottoms} for {vC, wa}
    {
        Edge h_prev = h;
        int topbot = (k % 2 == 0) ? q2 : q2 + 1;
        Edge hn = set_union(set_minus(h, sorted({xp, fr.X[topbot]})), sorted({vC, wa}));
        if (ctx.red(hn)) {
            Edge hp = partner_core(h_prev, {}, {vC, yp});
            if (!ctx.red(hp)) return blue_result(hp, h_prev);
            return red_result(hp, hn);
        }
        h = hn;
    }
    return blue_result(h, h1);
}

}  // namespace

Outcome half_cycle_even(const KUniformColoring& c, const LooseCycle& C1in,
                        const LooseCycle& C2in) {
    const int k = c.k();
    if (k < 8) throw InvalidInput("half_cycle_even needs k >= 8");
    CycleConfiguration cfg = make_configuration(c, C1in, C2in);
    const int l1 = cfg.l1(), l2 = cfg.l2();
    const int n = l1 + l2;
    if (n < 6 || n % 2 == 1 || l2 != l1 + 2)
        throw InvalidInput("half_cycle_even needs cycles of lengths n/2-1 and n/2+1");
    if (c.N() != (k - 1) * n + (n - 1) / 2)
        throw InvalidInput("half_cycle_even needs exactly (k-1)n + (n-1)/2 vertices");
    Ctx ctx(c);
    auto V = [&](long long p) { return cfg.C1.at(p); };
    auto U = [&](long long p) { return cfg.C2.at(p); };

    if (n == 6) {
        P2Hypothesis hyp;
        hyp.i = 0;
        hyp.j = 0;
        hyp.C = V(k - 1);
        hyp.w1 = cfg.W[0];
        hyp.w2 = cfg.W[1];
        hyp.vprev = V(1);
        hyp.uprev = U(1);
        hyp.vnext = V(k);
        hyp.unext = U(k);
        hyp.leftover_side = 1;
        Outcome sub = red_pair_path_impl(ctx, cfg, hyp);
        if (sub.kind == Outcome::Kind::BlueCycle) {
            sub.trace = ctx.trace;
            return sub;
        }
        Edge g1 = sub.red_path->edges[0], g2 = sub.red_path->edges[1];
        Vertex wa = -1;
        for (Vertex wv : cfg.W)
            if (set_contains(g1, wv) && !set_contains(g2, wv)) wa = wv;
        if (wa < 0) throw ConstructionError("half_cycle_even n=6: no W vertex in g1");
        Edge Pverts = set_union(g1, g2);
        Vertex y = pick_min_in(set_minus(cfg.f(0), Edge{U(1)}), Pverts);
        Vertex x = pick_min_in(set_minus(set_inter(set_minus(g2, g1), cfg.e(0)), Edge{V(1)}), {});
        Vertex xp = pick_min_in(set_minus(set_inter(set_minus(g1, g2), cfg.e(0)), Edge{V(k)}), {});
        Vertex yp = pick_min_in(set_minus(set_inter(set_minus(g2, g1), cfg.f(0)), Edge{U(1)}), {});
        Vertex vC = V(k - 1);
        const int q2 = k / 2;

        FrameSpec spec;
        spec.i = 1;
        spec.j = 1;
        Frame fr = build_frame(cfg, spec, nullptr);
        Edge h = frame_edge(fr, rng(2, q2), rng(q2 + 1, k - 1), {x, fr.Y[k]});
        std::vector<int> xhp = {q2};
        for (int p : rng(q2 + 2, k - 1)) xhp.push_back(p);
        Edge hp = frame_edge(fr, xhp, rng(2, q2), {xp, y});

        N6Result res;
        bool used = false;
        if (!ctx.red(h)) {
            Frame lf = build_frame(cfg, spec, &h);
            res = n6_g_ladder(ctx, cfg, lf, 1, 1, g1, g2, x, xp, y, yp, vC, wa);
            used = true;
        } else if (!ctx.red(hp)) {
            FrameSpec ls = spec;
            ls.h_x_low = false;
            ls.h_y_high = false;
            Frame lf = build_frame(cfg, ls, &hp);
            res = n6_gp_ladder(ctx, cfg, lf, 1, 1, g1, g2, x, xp, y, yp, vC, wa);
            used = true;
        }
        if (used) {
            if (res.is_blue) return outcome_blue(ctx, cfg, *res.blue);
            return outcome_red(ctx, cfg, *res.red_cycle);
        }
        return outcome_red(ctx, cfg, {g1, g2, h, hp});
    }

    // n >= 8
    P2Hypothesis hypE;
    hypE.i = 0;
    hypE.j = 0;
    hypE.C = V(k - 1);
    hypE.w1 = cfg.W[0];
    hypE.w2 = cfg.W[1];
    hypE.vprev = V(1);
    hypE.uprev = U(1);
    hypE.vnext = V(k);
    hypE.unext = U(k);
    hypE.leftover_side = 0;
    Outcome subE = red_pair_path_impl(ctx, cfg, hypE);
    if (subE.kind == Outcome::Kind::BlueCycle) {
        subE.trace = ctx.trace;
        return subE;
    }
    P2Hypothesis hypF = hypE;
    hypF.leftover_side = 1;
    Outcome subF = red_pair_path_impl(ctx, cfg, hypF);
    if (subF.kind == Outcome::Kind::BlueCycle) {
        subF.trace = ctx.trace;
        return subF;
    }
    LadderState st;
    st.i0 = 0;
    st.j0 = 0;
    st.t = 1;
    st.lastE = {subE.red_path->edges[0], subE.red_path->edges[1]};
    st.lastF = {subF.red_path->edges[0], subF.red_path->edges[1]};
    for (Vertex wv : cfg.W) {
        Edge both = set_union(set_union(st.lastE.a, st.lastE.b),
                              set_union(st.lastF.a, st.lastF.b));
        if (set_contains(both, wv)) st.B_union.push_back(wv);
    }
    LadderOutcome ext = ladder_step_impl(ctx, cfg, st);
    if (ext.blue_cycle) {
        Outcome out;
        out.kind = Outcome::Kind::BlueCycle;
        out.blue_cycle = *ext.blue_cycle;
        out.trace = ctx.trace;
        return out;
    }
    std::vector<Edge> P = ext.state->Epath();  // g_1 g_2 g_3 g_4
    auto g = [&](int idx) -> const Edge& { return P[idx - 1]; };
    Edge wpool = set_inter(set_minus(g(1), g(2)), Edge(cfg.W.begin(), cfg.W.end()));
    if (wpool.empty()) throw ConstructionError("half_cycle_even: no W vertex in g1 \\ g2");
    Vertex wa = wpool.front();

    // Step 2
    for (int t = 1; t <= n / 2 - 4; ++t) {
        int s = t + 2;  // 1-based slot
        Edge de = set_minus(g(s + 1), g(s));
        Vertex x = pick_by_pos(
            cfg.C1, set_minus(set_inter(de, cfg.e(s - 2)), Edge{cfg.e_first(s - 2)}), true);
        Vertex y = pick_by_pos(
            cfg.C2, set_minus(set_inter(de, cfg.f(s - 2)), Edge{cfg.f_first(s - 2)}), true);
        Edge h = set_union(
            set_minus(cfg.e(s - 1), sorted({cfg.e_first(s - 1), V((long long)s * (k - 1)),
                                            cfg.e_last(s - 1)})),
            sorted({x, U((long long)s * (k - 1)), cfg.f_last(s - 1)}));
        Edge hp = set_union(
            set_minus(cfg.f(s - 1), sorted({cfg.f_first(s - 1), U((long long)s * (k - 1)),
                                            cfg.f_last(s - 1)})),
            sorted({y, V((long long)s * (k - 1)), cfg.e_last(s - 1)}));
        if (ctx.red(h)) {
            P.push_back(h);
        } else if (ctx.red(hp)) {
            P.push_back(hp);
        } else {
            std::vector<Edge> blue = {hp};
            auto er = e_run(cfg, s + 1, s - 1);
            blue.insert(blue.end(), er.begin(), er.end());
            blue.push_back(h);
            auto frn = f_run(cfg, s + 1, s - 1);
            blue.insert(blue.end(), frn.begin(), frn.end());
            return outcome_blue_edges(ctx, cfg, blue);
        }
    }

    // Step 3: P has n/2 edges, close at slot n/2-1
    const int s = n / 2 - 1;
    Edge de = set_minus(g(n / 2), g(n / 2 - 1));
    Vertex x_f = pick_by_pos(
        cfg.C1, set_minus(set_inter(de, cfg.e(s - 2)), Edge{cfg.e_first(s - 2)}), true);
    Vertex y_f = pick_by_pos(
        cfg.C2, set_minus(set_inter(de, cfg.f(s - 2)), Edge{cfg.f_first(s - 2)}), true);
    Vertex xp_f = pick_by_pos(
        cfg.C1, set_minus(set_inter(set_minus(g(1), g(2)), cfg.e(0)), Edge{V(k)}), false);
    Edge h_f = set_union(
        set_minus(cfg.e(s - 1), sorted({cfg.e_first(s - 1), V((long long)s * (k - 1)), V(1)})),
        sorted({x_f, wa, cfg.f_last(s - 1)}));
    Edge hp_f = set_union(
        set_minus(cfg.f(s - 1), sorted({cfg.f_first(s - 1), U((long long)s * (k - 1)),
                                        cfg.f_last(s - 1)})),
        sorted({y_f, V((long long)s * (k - 1)), xp_f}));
    if (ctx.red(h_f)) {
        std::vector<Edge> red = P;
        red.push_back(h_f);
        return outcome_red(ctx, cfg, red);
    }
    if (ctx.red(hp_f)) {
        std::vector<Edge> red = P;
        red.push_back(hp_f);
        return outcome_red(ctx, cfg, red);
    }
    std::vector<Edge> blue = {hp_f};
    auto er = e_run(cfg, 1, s - 1);  // e_1 .. e_{n/2-2}
    blue.insert(blue.end(), er.begin(), er.end());
    blue.push_back(h_f);
    auto frn = f_run(cfg, s + 1, s - 1);
    blue.insert(blue.end(), frn.begin(), frn.end());
    return outcome_blue_edges(ctx, cfg, blue);
}

}  // namespace ramsey
