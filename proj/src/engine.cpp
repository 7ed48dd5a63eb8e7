#include <algorithm>

#include "engine_detail.hpp"

namespace ramsey {

namespace detail {

std::vector<int> rng(int a, int b) {
    std::vector<int> out;
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
}

Edge frame_edge(const Frame& fr, const std::vector<int>& xpos, const std::vector<int>& ypos,
                const std::vector<Vertex>& extra) {
    std::vector<Vertex> vs;
    for (int p : xpos) vs.push_back(fr.X[p]);
    for (int p : ypos) vs.push_back(fr.Y[p]);
    for (Vertex v : extra) vs.push_back(v);
    return sorted(vs);
}

Edge frame_all(const Frame& fr, const std::vector<Vertex>& extra) {
    std::vector<Vertex> vs(fr.X.begin() + 1, fr.X.end());
    vs.insert(vs.end(), fr.Y.begin() + 1, fr.Y.end());
    for (Vertex v : extra) vs.push_back(v);
    return sorted(vs);
}

Edge replace_one(const Edge& h, Vertex out, Vertex in) {
    if (!set_contains(h, out) || set_contains(h, in))
        throw ConstructionError("ladder swap is not applicable");
    return set_union(set_minus(h, Edge{out}), Edge{in});
}

Frame build_frame(const CycleConfiguration& cfg, const FrameSpec& spec, const Edge* h) {
    Frame fr;
    fr.k = cfg.k();
    fr.vP = spec.vP;
    fr.vN = spec.vN;
    fr.uP = spec.uP;
    fr.uN = spec.uN;
    fr.w1 = spec.w1;
    fr.w2 = spec.w2;
    fr.w3 = spec.w3;
    fr.X.assign(fr.k + 1, -1);
    fr.Y.assign(fr.k + 1, -1);

    Edge ex = spec.swap_sides ? cfg.f(spec.j) : cfg.e(spec.i);
    Edge ey = spec.swap_sides ? cfg.e(spec.i) : cfg.f(spec.j);
    Vertex ex_first = spec.swap_sides ? cfg.f_first(spec.j) : cfg.e_first(spec.i);
    Vertex ex_last = spec.swap_sides ? cfg.f_last(spec.j) : cfg.e_last(spec.i);
    Vertex ey_first = spec.swap_sides ? cfg.e_first(spec.i) : cfg.f_first(spec.j);
    Vertex ey_last = spec.swap_sides ? cfg.e_last(spec.i) : cfg.f_last(spec.j);
    if (spec.rev_x) std::swap(ex_first, ex_last);
    if (spec.rev_y) std::swap(ey_first, ey_last);
    fr.X[1] = ex_first;
    fr.X[fr.k] = ex_last;
    fr.Y[1] = ey_first;
    fr.Y[fr.k] = ey_last;

    Edge xin = set_minus(ex, sorted({ex_first, ex_last}));
    Edge yin = set_minus(ey, sorted({ey_first, ey_last}));

    // X side: interiors of h first (low positions), Cvert pinned at k-1
    std::vector<int> xslots = rng(2, fr.k - 1);
    if (spec.Cvert) {
        if (!set_contains(xin, *spec.Cvert))
            throw InvalidInput("C vertex is not interior to the X-side edge");
        fr.X[fr.k - 1] = *spec.Cvert;
        fr.Cv = *spec.Cvert;
        xslots.pop_back();
        xin = set_minus(xin, Edge{*spec.Cvert});
    }
    Edge xh = h ? set_inter(xin, *h) : Edge{};
    Edge xrest = set_minus(xin, xh);
    size_t slot = 0;
    if (spec.h_x_low) {
        for (Vertex v : xh) fr.X[xslots[slot++]] = v;
        for (Vertex v : xrest) fr.X[xslots[slot++]] = v;
    } else {
        for (Vertex v : xrest) fr.X[xslots[slot++]] = v;
        for (Vertex v : xh) fr.X[xslots[slot++]] = v;
    }
    if (slot != xslots.size()) throw ConstructionError("frame X assignment mismatch");

    // Y side: interiors of h take the top positions (A-form) or the bottom
    Edge yh = h ? set_inter(yin, *h) : Edge{};
    Edge yrest = set_minus(yin, yh);
    std::vector<int> yslots = rng(2, fr.k - 1);
    slot = 0;
    if (spec.h_y_high) {
        for (Vertex v : yrest) fr.Y[yslots[slot++]] = v;
        for (Vertex v : yh) fr.Y[yslots[slot++]] = v;
    } else {
        for (Vertex v : yh) fr.Y[yslots[slot++]] = v;
        for (Vertex v : yrest) fr.Y[yslots[slot++]] = v;
    }
    if (slot != yslots.size()) throw ConstructionError("frame Y assignment mismatch");
    return fr;
}

LooseCycle merge_blue(const CycleConfiguration& cfg, int i, int j, const Edge& a, const Edge& b) {
    const std::pair<ConnectorType, ConnectorType> pairs[] = {
        {ConnectorType::A, ConnectorType::B},
        {ConnectorType::B, ConnectorType::A},
        {ConnectorType::C, ConnectorType::D},
        {ConnectorType::D, ConnectorType::C},
    };
    if (!set_disjoint(a, b)) throw ConstructionError("merge fallback: connectors overlap");
    for (auto [ta, tb] : pairs) {
        auto ca = classify_as(a, cfg, i, j, ta);
        if (!ca) continue;
        auto cb = classify_as(b, cfg, i, j, tb);
        if (!cb) continue;
        return merge_cycles(cfg, *ca, *cb);
    }
    throw ConstructionError("merge fallback: no complementary classification found");
}

Vertex pick_min_in(const Edge& pool, const Edge& avoid) {
    for (Vertex v : pool)
        if (!set_contains(avoid, v)) return v;
    throw ConstructionError("pick_min_in: empty selection");
}

Vertex pick_by_pos(const LooseCycle& cyc, const Edge& pool, bool maximum) {
    if (pool.empty()) throw ConstructionError("pick_by_pos: empty pool");
    long long m = (long long)cyc.vertex_order.size();
    long long best_pos = -1;
    Vertex best = -1;
    for (Vertex v : pool) {
        long long pos = -1;
        for (long long p = 0; p < m; ++p)
            if (cyc.vertex_order[(size_t)p] == v) {
                pos = p;
                break;
            }
        if (pos < 0) throw ConstructionError("pick_by_pos: vertex not on the cycle");
        if (best_pos < 0 || (maximum ? pos > best_pos : pos < best_pos)) {
            best_pos = pos;
            best = v;
        }
    }
    return best;
}

LoosePath ordered_path(const std::vector<Edge>& edges) {
    auto res = validate(edges, StructureKind::Path);
    if (!res.ok) throw ConstructionError("constructed edges are not a loose path: " + res.reason);
    int n = (int)edges.size();
    int k = (int)edges[0].size();
    LoosePath p;
    p.edges = edges;
    std::vector<Vertex> conn(n > 1 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) conn[i] = set_inter(edges[i], edges[i + 1])[0];
    std::vector<Vertex> vo;
    for (int i = 0; i < n; ++i) {
        Edge rest = edges[i];
        if (i > 0) rest = set_minus(rest, Edge{conn[i - 1]});
        if (i + 1 < n) rest = set_minus(rest, Edge{conn[i]});
        if (i > 0) vo.push_back(conn[i - 1]);
        for (Vertex v : rest) vo.push_back(v);
    }
    p.vertex_order = vo;
    if ((int)vo.size() != n * (k - 1) + 1) throw ConstructionError("ordered path size mismatch");
    return p;
}

LoosePath ordered_pair_path(const Edge& a, const Edge& b) { return ordered_path({a, b}); }

LooseCycle ordered_cycle(const std::vector<Edge>& edges) {
    auto res = validate(edges, StructureKind::Cycle);
    if (!res.ok) throw ConstructionError("constructed edges are not a loose cycle: " + res.reason);
    return *res.cycle;
}

void assert_mono(const KUniformColoring& c, const std::vector<Edge>& edges, Color col,
                 const char* what) {
    for (const Edge& e : edges)
        if (c.color(e) != col) {
            std::string msg = std::string(what) + ": edge {";
            for (Vertex v : e) msg += std::to_string(v) + ",";
            msg += "} is not ";
            msg += col == Color::Red ? "red" : "blue";
            throw ConstructionError(msg);
        }
}

// ---- P2 ladder ----------------------------------------------------------------

namespace {

Vertex pick_free(const std::vector<Vertex>& pool, const Edge& avoid1, const Edge& avoid2 = {}) {
    std::vector<Vertex> sortedpool = pool;
    std::sort(sortedpool.begin(), sortedpool.end());
    for (Vertex v : sortedpool)
        if (!set_contains(avoid1, v) && !set_contains(avoid2, v)) return v;
    throw ConstructionError("no free vertex available for the ladder partner");
}

}  // namespace

Edge p2_h1(const Frame& fr, int l) {
    int k = fr.k;
    int EB = (k - l) / 2;
    int FB = (k - l) - EB;
    std::vector<Vertex> extra = {fr.vP, fr.uN};
    if (l == 1) extra.push_back(fr.w1);
    return frame_edge(fr, rng(2, EB), rng(k - FB + 1, k - 1), extra);
}

Edge p2_g2(const Frame& fr, int l, int leftover_side) {
    int k = fr.k;
    if (l == 1) {
        int q = (k - 1) / 2;
        std::vector<int> ypos = rng(2, q);
        ypos.push_back(q + 2);
        return frame_edge(fr, rng(q + 2, k - 2), ypos, {fr.vN, fr.uP, fr.w2});
    }
    int q = k / 2;
    if (leftover_side == 0) {
        std::vector<int> xpos = {q};
        for (int p : rng(q + 2, k - 1)) xpos.push_back(p);
        return frame_edge(fr, xpos, rng(2, q), {fr.vN, fr.uP});
    }
    std::vector<int> ypos = rng(2, q - 1);
    ypos.push_back(q + 1);
    return frame_edge(fr, rng(q + 1, k - 1), ypos, {fr.vN, fr.uP});
}

P2Result p2_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j,
                   P2Mode mode, int l, int leftover_side, Vertex fconn) {
    const int k = fr.k;
    const bool weak = mode == P2Mode::Weak;
    const int EB = (k - l) / 2;
    const int FB = (k - l) - EB;
    std::vector<Vertex> xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }

    auto partner_edge = [&](const Edge& base, Vertex z, std::vector<Vertex> incl) {
        std::vector<Vertex> excl = {fr.X[1], fr.X[k], fr.Y[1], fr.Y[k]};
        if (fr.Cv != -1) excl.push_back(fr.Cv);
        if (z != -1) excl.push_back(z);
        Edge core = frame_all(fr, weak ? std::vector<Vertex>{fr.w2} : std::vector<Vertex>{});
        Edge drop = base;
        for (Vertex v : excl) drop = set_union(drop, Edge{v});
        core = set_minus(core, drop);
        for (Vertex v : incl) core = set_union(core, Edge{v});
        if ((int)core.size() != k)
            throw ConstructionError("ladder partner has wrong size");
        return core;
    };
    auto pick_z = [&](int side, const Edge& avoid) -> Vertex {
        if (!weak) return -1;
        if (side == 0) return pick_free(xints, avoid, fr.Cv == -1 ? Edge{} : Edge{fr.Cv});
        return pick_free(yints, avoid);
    };
    auto blue_result = [&](const Edge& a, const Edge& b) {
        P2Result r;
        r.is_blue = true;
        r.blue = merge_blue(cfg, i, j, a, b);
        return r;
    };
    auto red_result = [&](Edge first, Edge second) {
        P2Result r;
        r.ga = std::move(first);
        r.gb = std::move(second);
        return r;
    };

    Edge h = p2_h1(fr, l);  // already probed blue by the caller

    // sweep the X side: swap X[t] out, X[k-l-t+1] in
    for (int t = 2; t <= EB; ++t) {
        Edge hn = replace_one(h, fr.X[t], fr.X[k - l - t + 1]);
        if (ctx.red(hn)) {
            Edge partner = partner_edge(h, pick_z(1, hn), {fr.uP, fr.vN});
            if (!ctx.red(partner)) return blue_result(h, partner);
            return red_result(hn, partner);
        }
        h = hn;
    }
    // sweep the Y side: swap Y[k-t] out, Y[t+1] in
    const int m = (l == 0 && k % 2 == 1) ? FB - 2 : FB - 1;
    for (int t = 1; t <= m; ++t) {
        Edge hn = replace_one(h, fr.Y[k - t], fr.Y[t + 1]);
        if (ctx.red(hn)) {
            Edge partner = partner_edge(h, pick_z(0, hn), {fr.uP, fr.vN});
            if (!ctx.red(partner)) return blue_result(h, partner);
            return red_result(hn, partner);
        }
        h = hn;
    }
    // swap the v-link: vP out, vN in (h becomes D-type)
    {
        Edge hn = replace_one(h, fr.vP, fr.vN);
        if (ctx.red(hn)) {
            Vertex usecond = mode == P2Mode::Final ? fconn : fr.uP;
            Edge partner = partner_edge(h, pick_z(leftover_side, hn), {fr.vN, usecond});
            if (!ctx.red(partner)) return blue_result(h, partner);
            return mode == P2Mode::Final ? red_result(partner, hn) : red_result(hn, partner);
        }
        h = hn;
    }
    Edge h_m1 = h;  // blue, D-type
    // swap the u-link: uN out, uP in (h becomes B-type)
    {
        Edge hn = replace_one(h, fr.uN, fr.uP);
        if (ctx.red(hn)) {
            Edge partner = partner_edge(h_m1, pick_z(leftover_side, hn), {fr.vP, fr.uP});
            if (!ctx.red(partner)) return blue_result(partner, h_m1);
            return mode == P2Mode::Final ? red_result(partner, hn) : red_result(hn, partner);
        }
        h = hn;
    }
    Edge h_m2 = h;  // blue, B-type
    Edge h1 = p2_h1(fr, l);

    if (l == 0 && k % 2 == 0) return blue_result(h1, h_m2);
    if (l == 0) {
        // k odd: trade the middle Y vertex for the middle X vertex
        Edge hn = replace_one(h_m2, fr.Y[(k + 1) / 2], fr.X[(k + 1) / 2]);
        if (ctx.red(hn)) {
            Edge partner = partner_edge(h_m2, pick_z(0, hn), {fr.vP, fr.uN});
            if (!ctx.red(partner)) return blue_result(partner, h_m2);
            return mode == P2Mode::Final ? red_result(partner, hn) : red_result(hn, partner);
        }
        return blue_result(h1, hn);
    }
    // l == 1: trade w1 for the vertex missing from both h1 and h_m2
    {
        Edge hn = k % 2 == 0 ? replace_one(h_m2, fr.w1, fr.X[k / 2])
                             : replace_one(h_m2, fr.w1, fr.Y[(k + 1) / 2]);
        if (ctx.red(hn)) {
            Edge partner = partner_edge(h_m2, pick_z(leftover_side, hn), {fr.vP, fr.uN});
            if (!ctx.red(partner)) return blue_result(partner, h_m2);
            return red_result(partner, hn);  // second disjunct of condition (iii)
        }
        return blue_result(h1, hn);
    }
}

}  // namespace detail

// ---- find_mono_c2 --------------------------------------------------------------

std::pair<Color, LooseCycle> find_mono_c2(const KUniformColoring& c, ProbeTrace* trace) {
    using namespace detail;
    int k = c.k(), N = c.N();
    if (k < 3) throw InvalidParameters("find_mono_c2 needs k >= 3");
    if (N < 2 * k - 2) throw TooFewVertices("find_mono_c2 needs at least 2k-2 vertices");
    Ctx ctx(c);
    // scan for two edges of opposite colors
    uint64_t total = binom(N, k);
    Edge first_edge = colex_unrank(0, N, k);
    Color c0 = ctx.probe(first_edge);
    std::optional<Edge> other;
    for (uint64_t r = 1; r < total; ++r) {
        Edge e = colex_unrank(r, N, k);
        if (c.color(e) != c0) {
            other = e;
            break;
        }
    }
    if (!other) {
        // monochromatic: canonical C^k_2
        LooseCycle c2 = canonical_loose_cycle(2, k);
        if (trace) *trace = ctx.trace;
        return {c0, c2};
    }
    ctx.trace.probes.push_back({*other, c.color(*other)});
    Edge red_e = c0 == Color::Red ? first_edge : *other;
    Edge blue_e = c0 == Color::Red ? *other : first_edge;
    // walk from red_e to blue_e one vertex swap at a time; some step flips color
    Edge cur = red_e;
    Edge target = blue_e;
    while (cur != target) {
        Vertex out = set_minus(cur, target).front();
        Vertex in = set_minus(target, cur).front();
        Edge next = replace_one(cur, out, in);
        if (ctx.probe(next) == Color::Blue) {
            target = next;  // found red cur adjacent to blue next
            break;
        }
        cur = next;
    }
    // cur is red, target is blue, |cur ∩ target| = k-1
    Edge shared = set_inter(cur, target);
    Vertex v1 = set_minus(cur, target).front();
    Vertex vk1 = set_minus(target, cur).front();
    Vertex v2 = shared.front();
    // W: any k-3 vertices outside cur ∪ target
    Edge both = set_union(cur, target);
    std::vector<Vertex> g_verts = {v1, v2, vk1};
    for (Vertex v = 0; v < N && (int)g_verts.size() < k; ++v)
        if (!set_contains(both, v)) g_verts.push_back(v);
    if ((int)g_verts.size() != k) throw ConstructionError("find_mono_c2: not enough vertices");
    Edge g = sorted(g_verts);
    Color gc = ctx.probe(g);
    Edge mate = gc == Color::Red ? cur : target;
    auto res = validate({mate, g}, StructureKind::Cycle);
    if (!res.ok) throw ConstructionError("find_mono_c2: pair is not a C_2: " + res.reason);
    assert_mono(c, res.cycle->edges, gc, "find_mono_c2");
    if (trace) *trace = ctx.trace;
    return {gc, *res.cycle};
}

// ---- step_down_1 / step_down_2 --------------------------------------------------

namespace {

using detail::Ctx;
using detail::ordered_cycle;
using detail::wrap;

LooseCycle require_red_cycle(const KUniformColoring& c, const LooseCycle& C, int min_n,
                             int min_k) {
    auto res = validate(C.edges, StructureKind::Cycle);
    if (!res.ok) throw InvalidInput("input cycle invalid: " + res.reason);
    if (C.n() < min_n) throw InvalidInput("cycle too short");
    if (C.k() < min_k) throw InvalidInput("uniformity too small");
    if ((uint64_t)c.N() < (uint64_t)C.n() * (C.k() - 1)) throw InvalidInput("host too small");
    for (const Edge& e : C.edges)
        if (c.color(e) != Color::Red) throw InvalidInput("input cycle is not red");
    return *res.cycle;
}

Outcome red_cycle_outcome(Ctx& ctx, const KUniformColoring& c, std::vector<Edge> edges) {
    Outcome out;
    out.kind = Outcome::Kind::RedCycle;
    out.red_cycle = ordered_cycle(edges);
    detail::assert_mono(c, out.red_cycle->edges, Color::Red, "red cycle witness");
    out.trace = ctx.trace;
    return out;
}

Outcome blue_cycle_outcome(Ctx& ctx, const KUniformColoring& c, std::vector<Edge> edges) {
    Outcome out;
    out.kind = Outcome::Kind::BlueCycle;
    out.blue_cycle = ordered_cycle(edges);
    detail::assert_mono(c, out.blue_cycle->edges, Color::Blue, "blue cycle witness");
    out.trace = ctx.trace;
    return out;
}

}  // namespace

Outcome step_down_1(const KUniformColoring& c, const LooseCycle& Cin) {
    LooseCycle C = require_red_cycle(c, Cin, 3, 6);
    int n = C.n(), k = C.k();
    Ctx ctx(c);
    auto V = [&](long long pos) { return C.at(pos); };  // 1-based, wraps
    auto cyc_edge = [&](int idx) { return C.edges[wrap(idx - 1, n)]; };
    auto last_of = [&](int idx) { return C.last_of(wrap(idx - 1, n)); };

    std::vector<Edge> fs(n);
    std::vector<int> base(n);  // f_i sits over e_{base[i]} (1-based)
    if (n % 2 == 1) {
        for (int i = 1; i <= n; ++i) {
            int jj = i <= (n + 1) / 2 ? 2 * i - 1 : 2 * i - n - 1;
            base[i - 1] = jj;
            Edge f = set_minus(cyc_edge(jj), Edge{last_of(jj)});
            fs[i - 1] = set_union(f, Edge{last_of(jj + 1)});
        }
        for (int i = 0; i < n; ++i) {
            if (ctx.red(fs[i])) {
                int jj = base[i];
                std::vector<Edge> red = {fs[i]};
                for (int t = 0; t < n - 2; ++t) red.push_back(cyc_edge(jj + 2 + t));
                return red_cycle_outcome(ctx, c, red);
            }
        }
        return blue_cycle_outcome(ctx, c, fs);
    }
    // n even: F(j) = e_j minus its top two positions plus e_{j+1}'s top two,
    // with patches at the n/2 and n slots
    auto F = [&](int j) {
        Edge f = set_minus(cyc_edge(j), sorted({V((long long)j * (k - 1)), V((long long)j * (k - 1) + 1)}));
        return set_union(f, sorted({V((long long)(j + 1) * (k - 1)), V((long long)(j + 1) * (k - 1) + 1)}));
    };
    for (int i = 1; i <= n; ++i) {
        Edge f;
        int jj;
        if (i <= n / 2 - 1) {
            jj = 2 * i - 1;
            f = F(jj);
        } else if (i == n / 2) {
            jj = n - 1;
            f = set_minus(cyc_edge(n - 1),
                          sorted({V((long long)(n - 1) * (k - 1)), V((long long)(n - 1) * (k - 1) + 1)}));
            f = set_union(f, sorted({V((long long)n * (k - 1)), V(k - 1)}));
        } else if (i <= n - 1) {
            int a = wrap(3 - 2 * i - 1, n) + 1;  // 1..n
            jj = a - 1 == 0 ? n : a - 1;
            f = F(jj);
        } else {
            jj = 2;  // patched slot 2
            f = set_minus(cyc_edge(2), sorted({V(k), V(2 * (k - 1)), V(2 * (k - 1) + 1)}));
            f = set_union(f, sorted({V(k - 2), V(3 * (k - 1)), V(3 * (k - 1) + 1)}));
        }
        base[i - 1] = jj;
        fs[i - 1] = f;
    }
    for (int i = 1; i <= n; ++i) {
        if (ctx.red(fs[i - 1])) {
            std::vector<Edge> red = {fs[i - 1]};
            if (i <= n / 2 - 1 || (i > n / 2 && i <= n - 1)) {
                int jj = base[i - 1];  // skip e_jj, e_{jj+1}
                for (int t = 0; t < n - 2; ++t) red.push_back(cyc_edge(jj + 2 + t));
            } else if (i == n / 2) {
                // f covers e_{n-1}, e_n's top interior and v_{k-1}: skip e_{n-1}, e_n
                for (int t = 1; t <= n - 2; ++t) red.push_back(cyc_edge(t));
            } else {
                // i == n: f covers e_2-body, v_{k-2}, e_3's top pair: skip e_2, e_3
                for (int t = 4; t <= n + 1; ++t) red.push_back(cyc_edge(t));
            }
            return red_cycle_outcome(ctx, c, red);
        }
    }
    return blue_cycle_outcome(ctx, c, fs);
}

Outcome step_down_2(const KUniformColoring& c, const LooseCycle& Cin) {
    LooseCycle C = require_red_cycle(c, Cin, 4, 6);
    int n = C.n(), k = C.k();
    Ctx ctx(c);
    auto V = [&](long long pos) { return C.at(pos); };
    auto cyc_edge = [&](int idx) { return C.edges[wrap(idx - 1, n)]; };
    auto first_of = [&](int idx) { return C.first_of(wrap(idx - 1, n)); };
    auto last_of = [&](int idx) { return C.last_of(wrap(idx - 1, n)); };

    if (n % 3 != 0) {
        std::vector<Edge> fs(n);
        std::vector<int> base(n);
        for (int i = 1; i <= n; ++i) {
            int jj = wrap(3 * i - 2 - 1, n) + 1;
            base[i - 1] = jj;
            fs[i - 1] = set_union(set_minus(cyc_edge(jj), Edge{last_of(jj)}), Edge{last_of(jj + 2)});
        }
        for (int i = 1; i <= n; ++i) {
            if (ctx.red(fs[i - 1])) {
                int jj = base[i - 1];
                std::vector<Edge> red = {fs[i - 1]};
                for (int t = 0; t < n - 3; ++t) red.push_back(cyc_edge(jj + 3 + t));
                return red_cycle_outcome(ctx, c, red);
            }
        }
        return blue_cycle_outcome(ctx, c, fs);
    }
    // n ≡ 0 (mod 3): tripartition A_i, B_i, C_i of each edge with
    // first(e_i) in A_i, last(e_i) in C_i and |A|>=|B|>=|C|>=|A|-1
    std::vector<Edge> Ai(n + 1), Bi(n + 1), Ci(n + 1);
    int szA = (k + 2) / 3, szB = (k + 1) / 3, szC = k / 3;
    for (int idx = 1; idx <= n; ++idx) {
        Edge e = cyc_edge(idx);
        Vertex fv = first_of(idx), lv = last_of(idx);
        Edge inner = set_minus(e, sorted({fv, lv}));
        std::vector<Vertex> a = {fv}, b, cc = {lv};
        size_t p = 0;
        while ((int)a.size() < szA) a.push_back(inner[p++]);
        while ((int)b.size() < szB) b.push_back(inner[p++]);
        while ((int)cc.size() < szC) cc.push_back(inner[p++]);
        Ai[idx] = sorted(a);
        Bi[idx] = sorted(b);
        Ci[idx] = sorted(cc);
    }
    auto pick_min = [&](const Edge& pool, const Edge& avoid) {
        for (Vertex v : pool)
            if (!set_contains(avoid, v)) return v;
        throw ConstructionError("step_down_2: empty pick");
    };
    Vertex v = pick_min(Ci[1], Edge{V(k)});       // v in C_1 \ {v_k}
    Vertex vp = Bi[1].front();                    // v' in B_1
    Vertex vpp = Bi[2].front();                   // v'' in B_2
    std::vector<Edge> fs(n);
    std::vector<int> kind(n);  // 0 ascending triple, 1 = n/3 patch, 2 descending, 3 = 2n/3, 4 = n
    std::vector<int> base(n);
    for (int i = 1; i <= n; ++i) {
        if (i <= n / 3 - 1) {
            int jj = 3 * (i - 1) + 1;
            fs[i - 1] = set_union(set_union(Ai[jj], Bi[jj + 1]), Ci[jj + 2]);
            kind[i - 1] = 0;
            base[i - 1] = jj;
        } else if (i == n / 3) {
            Edge f = set_union(set_union(Ai[n - 2], Bi[n - 1]), set_minus(Ci[n], Edge{V(1)}));
            fs[i - 1] = set_union(f, Edge{v});
            kind[i - 1] = 1;
        } else if (i <= 2 * n / 3 - 1) {
            int c3 = wrap(2 * n + 4 - 3 * i - 1, n) + 1;
            int b3 = wrap(2 * n + 3 - 3 * i - 1, n) + 1;
            int a3 = wrap(2 * n + 2 - 3 * i - 1, n) + 1;
            fs[i - 1] = set_union(set_union(Ci[c3], Bi[b3]), Ai[a3]);
            kind[i - 1] = 2;
            base[i - 1] = c3;
        } else if (i == 2 * n / 3) {
            Edge f = set_union(set_union(Ci[4], Bi[3]), set_minus(Ai[2], Edge{V(k)}));
            fs[i - 1] = set_union(f, Edge{vp});
            kind[i - 1] = 3;
        } else if (i <= n - 1) {
            int c3 = wrap(3 * n + 5 - 3 * i - 1, n) + 1;
            int b3 = wrap(3 * n + 4 - 3 * i - 1, n) + 1;
            int a3 = wrap(3 * n + 3 - 3 * i - 1, n) + 1;
            fs[i - 1] = set_union(set_union(Ci[c3], Bi[b3]), Ai[a3]);
            kind[i - 1] = 2;
            base[i - 1] = c3;
        } else {
            Edge f = set_union(set_union(Ci[5], Bi[4]), set_minus(Ai[3], Edge{V(2 * (k - 1) + 1)}));
            fs[i - 1] = set_union(f, Edge{vpp});
            kind[i - 1] = 4;
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (!ctx.red(fs[i - 1])) continue;
        std::vector<Edge> red = {fs[i - 1]};
        switch (kind[i - 1]) {
            case 0: {  // spans e_j, e_{j+1}, e_{j+2}
                int jj = base[i - 1];
                for (int t = 0; t < n - 3; ++t) red.push_back(cyc_edge(jj + 3 + t));
                break;
            }
            case 1:  // spans e_{n-2}, e_{n-1}, e_n plus v in e_1
                for (int t = 1; t <= n - 3; ++t) red.push_back(cyc_edge(t));
                break;
            case 2: {  // spans e_{c3}, e_{c3-1}, e_{c3-2}
                int c3 = base[i - 1];
                for (int t = 0; t < n - 3; ++t) red.push_back(cyc_edge(c3 + 1 + t));
                break;
            }
            case 3:  // spans e_2, e_3, e_4 plus v' in e_1
                for (int t = 5; t <= n + 1; ++t) red.push_back(cyc_edge(t));
                break;
            case 4:  // spans e_3, e_4, e_5 plus v'' in e_2
                for (int t = 6; t <= n + 2; ++t) red.push_back(cyc_edge(t));
                break;
        }
        return red_cycle_outcome(ctx, c, red);
    }
    return blue_cycle_outcome(ctx, c, fs);
}

// ---- red_pair_path / red_pair_path_strong ---------------------------------------

namespace {

using detail::build_frame;
using detail::Frame;
using detail::FrameSpec;
using detail::P2Mode;
using detail::p2_g2;
using detail::p2_h1;
using detail::p2_ladder;

void check_p2_hypothesis(const CycleConfiguration& cfg, const P2Hypothesis& h, bool with_b) {
    if (cfg.k() < 8) throw InvalidInput("the pair lemmas need k >= 8");
    auto in_set = [&](const std::vector<Vertex>& s, Vertex v) {
        return std::find(s.begin(), s.end(), v) != s.end();
    };
    if (!set_contains(cfg.e(h.i - 1), h.vprev) || h.vprev == cfg.e_first(h.i - 1))
        throw InvalidInput("v' must lie in e_{i-1} minus its first vertex");
    if (!set_contains(cfg.e(h.i + 1), h.vnext) || h.vnext == cfg.e_last(h.i + 1))
        throw InvalidInput("v'' must lie in e_{i+1} minus its last vertex");
    if (!set_contains(cfg.f(h.j - 1), h.uprev) || h.uprev == cfg.f_first(h.j - 1))
        throw InvalidInput("u' must lie in f_{j-1} minus its first vertex");
    if (!set_contains(cfg.f(h.j + 1), h.unext) || h.unext == cfg.f_last(h.j + 1))
        throw InvalidInput("u'' must lie in f_{j+1} minus its last vertex");
    std::vector<Vertex> links = {h.vprev, h.vnext, h.uprev, h.unext};
    std::sort(links.begin(), links.end());
    if (std::adjacent_find(links.begin(), links.end()) != links.end())
        throw InvalidInput("link vertices must be distinct");
    if (h.C) {
        Edge inner = cfg.e_interior(h.i);
        if (!set_contains(inner, *h.C)) throw InvalidInput("C must be interior to e_i");
    }
    if (with_b) {
        if (h.w1 == h.w2 || !in_set(cfg.W, h.w1) || !in_set(cfg.W, h.w2))
            throw InvalidInput("B must be two distinct vertices of W");
    }
}

Outcome finish_p2(detail::Ctx& ctx, const CycleConfiguration& cfg, const detail::P2Result& r,
                  const P2Hypothesis* hyp, bool strong,
                  const std::optional<std::array<Vertex, 4>>& strong_links) {
    Outcome out;
    if (r.is_blue) {
        out.kind = Outcome::Kind::BlueCycle;
        detail::assert_mono(cfg.coloring, r.blue->edges, Color::Blue, "P2 blue witness");
        out.blue_cycle = *r.blue;
        out.trace = ctx.trace;
        return out;
    }
    Edge ga = r.ga, gb = r.gb;
    if (!strong && hyp->C) {
        // orient the pair for condition (iii): the w1-carrier (or the only
        // B-carrier) leads
        Edge B = sorted({hyp->w1, hyp->w2});
        bool swap_pair = (set_contains(gb, hyp->w1) && set_contains(ga, hyp->w2)) ||
                         (set_inter(ga, B).empty() && !set_inter(gb, B).empty());
        if (swap_pair) std::swap(ga, gb);
    }
    LoosePath p = detail::ordered_pair_path(ga, gb);
    detail::assert_mono(cfg.coloring, p.edges, Color::Red, "P2 red path");
    std::string bad;
    if (strong) {
        auto& L = *strong_links;
        bad = check_p2_strong_conditions(cfg, hyp->i, hyp->j, L[0], L[1], L[2], L[3], p);
    } else {
        bad = check_p2_conditions(cfg, *hyp, p);
    }
    if (!bad.empty()) throw ConstructionError("P2 output violates " + bad);
    out.kind = Outcome::Kind::RedPath;
    out.red_path = std::move(p);
    out.trace = ctx.trace;
    return out;
}

}  // namespace

namespace detail {

namespace {

// Odd-k fallback for |C| = 1 when the favorable B-form mate is blue: the
// standard mate shape is balanced only for even k, so sweep a family of mates that
// each share one vertex with the red g1; red mates close the pair, blue
// mates are answered by their disjoint A-form complement.
P2Result weak_family_sweep(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i,
                           int j, const Edge& g1, int leftover_side) {
    const int k = fr.k;
    const int EB = (k - 1) / 2;
    const int FB = (k - 1) - EB;
    Edge xpool, ypool;  // interiors outside g1 (and C on the X side)
    for (int p = EB + 1; p <= k - 2; ++p) xpool.push_back(fr.X[p]);
    for (int p = 2; p <= k - FB; ++p) ypool.push_back(fr.Y[p]);
    xpool = sorted(xpool);
    ypool = sorted(ypool);
    Edge g1_xints, g1_yints;
    for (int p = 2; p <= EB; ++p) g1_xints.push_back(fr.X[p]);
    for (int p = k - FB + 1; p <= k - 1; ++p) g1_yints.push_back(fr.Y[p]);
    g1_xints = sorted(g1_xints);
    g1_yints = sorted(g1_yints);
    Edge xints, yints;
    for (int p = 2; p <= k - 1; ++p) {
        xints.push_back(fr.X[p]);
        yints.push_back(fr.Y[p]);
    }
    xints = sorted(xints);
    yints = sorted(yints);

    auto try_member = [&](const Edge& mate) -> std::optional<P2Result> {
        if (ctx.red(mate)) {
            P2Result r;
            r.ga = g1;
            r.gb = mate;
            return r;
        }
        Edge as = sorted({fr.vP, fr.uN});
        as = set_union(as, set_minus(set_minus(xints, mate), Edge{fr.Cv}));
        as = set_union(as, set_minus(yints, mate));
        if ((int)as.size() != k) throw ConstructionError("weak sweep complement size");
        if (!ctx.red(as)) {
            P2Result r;
            r.is_blue = true;
            r.blue = merge_blue(cfg, i, j, as, mate);
            return r;
        }
        return std::nullopt;
    };
    // interior splits that keep a leftover vertex on both sides at any k:
    // an e-side share takes (FB-1, EB-1) interiors, an f-side share (FB-2, EB)
    (void)leftover_side;
    for (Vertex share : g1_xints)
        for (size_t xdrop = 0; xdrop < xpool.size(); ++xdrop) {
            std::vector<Vertex> vs = {share, fr.vN, fr.uP, fr.w2};
            int need_x = FB - 2;
            for (size_t z = 0; z < xpool.size() && need_x > 0; ++z)
                if (z != xdrop) {
                    vs.push_back(xpool[z]);
                    --need_x;
                }
            if (need_x > 0) continue;
            int need_y = EB - 1;
            for (size_t z = 0; z < ypool.size() && need_y > 0; ++z) {
                vs.push_back(ypool[z]);
                --need_y;
            }
            if (need_y > 0 || (int)vs.size() != k) continue;
            Edge mate = sorted(vs);
            if (set_inter(mate, g1).size() != 1) continue;
            if (auto r = try_member(mate)) return *r;
        }
    for (Vertex share : g1_yints)
        for (size_t ydrop = 0; ydrop < ypool.size(); ++ydrop) {
            std::vector<Vertex> vs = {share, fr.vN, fr.uP, fr.w2};
            int need_x = FB - 2;
            for (size_t z = 0; z < xpool.size() && need_x > 0; ++z) {
                vs.push_back(xpool[z]);
                --need_x;
            }
            int need_y = EB - 1;
            for (size_t z = 0; z < ypool.size() && need_y > 0; ++z)
                if (z != ydrop) {
                    vs.push_back(ypool[z]);
                    --need_y;
                }
            if (need_x > 0 || need_y > 0 || (int)vs.size() != k) continue;
            Edge mate = sorted(vs);
            if (set_inter(mate, g1).size() != 1) continue;
            if (auto r = try_member(mate)) return *r;
        }
    throw ConstructionError("weak family sweep exhausted");
}

}  // namespace

Outcome red_pair_path_impl(Ctx& ctx, const CycleConfiguration& cfg, const P2Hypothesis& hyp) {
    check_p2_hypothesis(cfg, hyp, true);
    int l = hyp.C ? 1 : 0;

    FrameSpec fwd;
    fwd.i = hyp.i;
    fwd.j = hyp.j;
    fwd.vP = hyp.vprev;
    fwd.vN = hyp.vnext;
    fwd.uP = hyp.uprev;
    fwd.uN = hyp.unext;
    fwd.Cvert = hyp.C;
    fwd.w1 = hyp.w1;
    fwd.w2 = hyp.w2;
    Frame fr = build_frame(cfg, fwd, nullptr);
    Edge g1 = p2_h1(fr, l);
    Edge g2 = p2_g2(fr, l, hyp.leftover_side);
    if (!ctx.red(g1)) {
        Frame lf = build_frame(cfg, fwd, &g1);
        auto r = p2_ladder(ctx, cfg, lf, hyp.i, hyp.j, P2Mode::Weak, l, hyp.leftover_side);
        return finish_p2(ctx, cfg, r, &hyp, false, std::nullopt);
    }
    if (!ctx.red(g2)) {
        if (l == 1 && cfg.k() % 2 == 1) {
            auto r = weak_family_sweep(ctx, cfg, fr, hyp.i, hyp.j, g1, hyp.leftover_side);
            return finish_p2(ctx, cfg, r, &hyp, false, std::nullopt);
        }
        FrameSpec other = fwd;
        int leftover = hyp.leftover_side;
        if (l == 1) {
            // reverse both orientations: the B-form mate becomes the A form
            other.rev_x = other.rev_y = true;
            std::swap(other.vP, other.vN);
            std::swap(other.uP, other.uN);
            std::swap(other.w1, other.w2);
        } else {
            // swap the cycle sides so the sizes match the A form for odd k
            other.swap_sides = true;
            other.vP = fwd.uP;
            other.uN = fwd.vN;
            other.vN = fwd.uN;
            other.uP = fwd.vP;
            leftover = 1 - leftover;
        }
        Frame lf = build_frame(cfg, other, &g2);
        auto r = p2_ladder(ctx, cfg, lf, hyp.i, hyp.j, P2Mode::Weak, l, leftover);
        return finish_p2(ctx, cfg, r, &hyp, false, std::nullopt);
    }
    detail::P2Result r;
    r.ga = g1;
    r.gb = g2;
    return finish_p2(ctx, cfg, r, &hyp, false, std::nullopt);
}


}  // namespace detail

Outcome red_pair_path(const CycleConfiguration& cfg, const P2Hypothesis& hyp) {
    detail::Ctx ctx(cfg.coloring);
    return detail::red_pair_path_impl(ctx, cfg, hyp);
}

Outcome red_pair_path_strong(const CycleConfiguration& cfg, int i, int j, Vertex vprev,
                             Vertex vnext, Vertex uprev, Vertex unext) {
    P2Hypothesis hyp;
    hyp.i = i;
    hyp.j = j;
    hyp.vprev = vprev;
    hyp.vnext = vnext;
    hyp.uprev = uprev;
    hyp.unext = unext;
    hyp.leftover_side = 0;
    check_p2_hypothesis(cfg, hyp, false);
    detail::Ctx ctx(cfg.coloring);
    std::array<Vertex, 4> links = {vprev, vnext, uprev, unext};

    FrameSpec fwd;
    fwd.i = i;
    fwd.j = j;
    fwd.vP = vprev;
    fwd.vN = vnext;
    fwd.uP = uprev;
    fwd.uN = unext;
    Frame fr = build_frame(cfg, fwd, nullptr);
    Edge g1 = p2_h1(fr, 0);
    Edge g2 = p2_g2(fr, 0, 0);
    if (!ctx.red(g1)) {
        Frame lf = build_frame(cfg, fwd, &g1);
        auto r = p2_ladder(ctx, cfg, lf, i, j, P2Mode::Strong, 0, 0);
        return finish_p2(ctx, cfg, r, &hyp, true, links);
    }
    if (!ctx.red(g2)) {
        FrameSpec other = fwd;
        other.swap_sides = true;
        other.vP = fwd.uP;
        other.uN = fwd.vN;
        other.vN = fwd.uN;
        other.uP = fwd.vP;
        Frame lf = build_frame(cfg, other, &g2);
        auto r = p2_ladder(ctx, cfg, lf, i, j, P2Mode::Strong, 0, 0);
        return finish_p2(ctx, cfg, r, &hyp, true, links);
    }
    detail::P2Result r;
    r.ga = g1;
    r.gb = g2;
    return finish_p2(ctx, cfg, r, &hyp, true, links);
}

// ---- condition checkers ---------------------------------------------------------

std::string check_p2_conditions(const CycleConfiguration& cfg, const P2Hypothesis& hyp,
                                const LoosePath& P) {
    if (P.n() != 2) return "output is not a 2-path";
    const Edge& g1 = P.edges[0];
    const Edge& g2 = P.edges[1];
    Edge inner_e = cfg.e_interior(hyp.i);
    Edge inner_f = cfg.f_interior(hyp.j);
    Edge Cset = hyp.C ? Edge{*hyp.C} : Edge{};
    Edge B = sorted({hyp.w1, hyp.w2});
    Edge links = sorted({hyp.vprev, hyp.vnext, hyp.uprev, hyp.unext});
    Edge allowed = set_union(set_minus(set_union(inner_e, inner_f), Cset), links);
    int bused = 0;
    for (Vertex v : set_union(g1, g2)) {
        if (set_contains(allowed, v)) continue;
        if (set_contains(B, v)) {
            ++bused;
            continue;
        }
        return "condition (i): vertex " + std::to_string(v) + " outside the allowed universe";
    }
    int lC = hyp.C ? 1 : 0;
    if (bused > lC + 1) return "condition (i): |B'| exceeds |C|+1";
    for (const Edge* g : {&g1, &g2}) {
        if (set_inter(*g, inner_e).size() < 2) return "condition (ii): e_i interior overlap < 2";
        if (set_inter(*g, inner_f).size() < 2) return "condition (ii): f_j interior overlap < 2";
    }
    if (lC == 1) {
        bool first = set_contains(g1, hyp.w1) && !set_contains(g2, hyp.w1) &&
                     set_contains(g2, hyp.w2) && !set_contains(g1, hyp.w2);
        int b1 = (int)set_inter(g1, B).size(), b2 = (int)set_inter(g2, B).size();
        bool second = b1 == 1 && b2 == 0;
        if (!first && !second) return "condition (iii): B distribution";
    }
    // leftover vertex on the designated side
    Edge side = hyp.leftover_side == 0 ? cfg.e(hyp.i) : cfg.f(hyp.j);
    Vertex sfirst = hyp.leftover_side == 0 ? cfg.e_first(hyp.i) : cfg.f_first(hyp.j);
    Edge Pv = set_union(g1, g2);
    bool found = false;
    for (Vertex v : side)
        if (v != sfirst && !set_contains(Pv, v) && !(hyp.C && *hyp.C == v)) found = true;
    if (!found) return "leftover vertex missing on the designated edge";
    return "";
}

std::string check_p2_strong_conditions(const CycleConfiguration& cfg, int i, int j, Vertex vprev,
                                       Vertex vnext, Vertex uprev, Vertex unext,
                                       const LoosePath& P) {
    if (P.n() != 2) return "output is not a 2-path";
    Edge inner_e = cfg.e_interior(i);
    Edge inner_f = cfg.f_interior(j);
    Edge links = sorted({vprev, vnext, uprev, unext});
    Edge allowed = set_union(set_union(inner_e, inner_f), links);
    for (Vertex v : set_union(P.edges[0], P.edges[1]))
        if (!set_contains(allowed, v))
            return "strong containment: vertex " + std::to_string(v) + " outside";
    for (const Edge& g : P.edges) {
        if (set_inter(g, inner_e).size() < 3) return "strong overlap: e_i side < 3";
        if (set_inter(g, inner_f).size() < 3) return "strong overlap: f_j side < 3";
    }
    return "";
}

}  // namespace ramsey
