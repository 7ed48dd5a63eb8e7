#include "ramsey/connector.hpp"

#include <algorithm>

namespace ramsey {

namespace {
int wrap(int i, int n) { return ((i % n) + n) % n; }
}  // namespace

const Edge& CycleConfiguration::e(int i) const { return C1.edges[wrap(i, l1())]; }
const Edge& CycleConfiguration::f(int j) const { return C2.edges[wrap(j, l2())]; }
Vertex CycleConfiguration::e_first(int i) const { return C1.first_of(wrap(i, l1())); }
Vertex CycleConfiguration::e_last(int i) const { return C1.last_of(wrap(i, l1())); }
Vertex CycleConfiguration::f_first(int j) const { return C2.first_of(wrap(j, l2())); }
Vertex CycleConfiguration::f_last(int j) const { return C2.last_of(wrap(j, l2())); }

std::vector<Vertex> CycleConfiguration::e_interior(int i) const {
    return set_minus(e(i), Edge{std::min(e_first(i), e_last(i)), std::max(e_first(i), e_last(i))});
}

std::vector<Vertex> CycleConfiguration::f_interior(int j) const {
    return set_minus(f(j), Edge{std::min(f_first(j), f_last(j)), std::max(f_first(j), f_last(j))});
}

CycleConfiguration make_configuration(const KUniformColoring& coloring, const LooseCycle& C1in,
                                      const LooseCycle& C2in) {
    auto r1 = validate(C1in.edges, StructureKind::Cycle);
    auto r2 = validate(C2in.edges, StructureKind::Cycle);
    if (!r1.ok) throw InvalidInput("C1 is not a loose cycle: " + r1.reason);
    if (!r2.ok) throw InvalidInput("C2 is not a loose cycle: " + r2.reason);
    LooseCycle C1 = C1in, C2 = C2in;
    if (C1.n() > C2.n()) std::swap(C1, C2);
    if (C1.n() < 2) throw InvalidInput("configuration needs l1 >= 2");
    if (C1.k() != coloring.k() || C2.k() != coloring.k())
        throw InvalidInput("cycle uniformity differs from the coloring");
    auto v1 = C1.vertices(), v2 = C2.vertices();
    if (!set_disjoint(v1, v2)) throw InvalidInput("C1 and C2 share vertices");
    for (const Edge& e : C1.edges)
        if (coloring.color(e) != Color::Blue) throw InvalidInput("C1 has a non-blue edge");
    for (const Edge& e : C2.edges)
        if (coloring.color(e) != Color::Blue) throw InvalidInput("C2 has a non-blue edge");
    Edge covered = set_union(v1, v2);
    std::vector<Vertex> W;
    for (Vertex v = 0; v < coloring.N(); ++v)
        if (!set_contains(covered, v)) W.push_back(v);
    if (W.size() < 2) throw InvalidInput("configuration needs |W| >= 2");
    return CycleConfiguration{coloring, C1, C2, W};
}

namespace {

struct LinkSides {
    bool from_prev = false;  // member of previous cycle edge minus its first vertex
    bool from_next = false;  // member of next cycle edge minus its last vertex
};

LinkSides v_link_sides(const CycleConfiguration& cfg, int i, Vertex v) {
    LinkSides s;
    s.from_prev = set_contains(cfg.e(i - 1), v) && v != cfg.e_first(i - 1);
    s.from_next = set_contains(cfg.e(i + 1), v) && v != cfg.e_last(i + 1);
    return s;
}

LinkSides u_link_sides(const CycleConfiguration& cfg, int j, Vertex u) {
    LinkSides s;
    s.from_prev = set_contains(cfg.f(j - 1), u) && u != cfg.f_first(j - 1);
    s.from_next = set_contains(cfg.f(j + 1), u) && u != cfg.f_last(j + 1);
    return s;
}

// type table: v-side prev = A/C, v-side next = B/D; u-side next = A/D, u-side prev = B/C
bool type_matches(ConnectorType t, const LinkSides& vs, const LinkSides& us) {
    switch (t) {
        case ConnectorType::A: return vs.from_prev && us.from_next;
        case ConnectorType::B: return vs.from_next && us.from_prev;
        case ConnectorType::C: return vs.from_prev && us.from_prev;
        case ConnectorType::D: return vs.from_next && us.from_next;
    }
    return false;
}

std::optional<ConnectorEdge> classify_impl(const Edge& g, const CycleConfiguration& cfg, int i,
                                           int j, std::optional<ConnectorType> want) {
    check_edge(g, cfg.coloring.N(), cfg.k());
    Edge inner_e = cfg.e_interior(i);
    Edge inner_f = cfg.f_interior(j);
    Edge Wset(cfg.W.begin(), cfg.W.end());
    // every vertex of g must be placeable: interior of e_i, interior of f_j,
    // W, or serve as one of the two links
    std::vector<Vertex> vcands, ucands;
    for (Vertex v : g) {
        auto vs = v_link_sides(cfg, i, v);
        if (vs.from_prev || vs.from_next) vcands.push_back(v);
        auto us = u_link_sides(cfg, j, v);
        if (us.from_prev || us.from_next) ucands.push_back(v);
    }
    const std::vector<ConnectorType> order = {ConnectorType::A, ConnectorType::B, ConnectorType::C,
                                              ConnectorType::D};
    for (Vertex vp : vcands)
        for (Vertex up : ucands) {
            if (vp == up) continue;
            Edge rest = set_minus(g, sorted({std::min(vp, up), std::max(vp, up)}));
            bool placeable = true;
            Edge Ep, Fp, Wp;
            for (Vertex x : rest) {
                if (set_contains(inner_e, x)) Ep.push_back(x);
                else if (set_contains(inner_f, x)) Fp.push_back(x);
                else if (set_contains(Wset, x)) Wp.push_back(x);
                else {
                    placeable = false;
                    break;
                }
            }
            if (!placeable) continue;
            auto vs = v_link_sides(cfg, i, vp);
            auto us = u_link_sides(cfg, j, up);
            for (ConnectorType t : order) {
                if (want && *want != t) continue;
                if (!type_matches(t, vs, us)) continue;
                ConnectorEdge ce;
                ce.g = g;
                ce.i = i;
                ce.j = j;
                ce.E = set_union(Ep, Edge{vp});
                ce.F = set_union(Fp, Edge{up});
                ce.Wp = Wp;
                ce.vprime = vp;
                ce.uprime = up;
                ce.typ = t;
                ce.p = (int)ce.E.size();
                ce.q = (int)ce.Wp.size();
                ce.r = (int)ce.F.size();
                return ce;
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<ConnectorEdge> classify(const Edge& g, const CycleConfiguration& cfg, int i, int j) {
    return classify_impl(g, cfg, i, j, std::nullopt);
}

std::optional<ConnectorEdge> classify_as(const Edge& g, const CycleConfiguration& cfg, int i,
                                         int j, ConnectorType want) {
    return classify_impl(g, cfg, i, j, want);
}

ConnectorEdge complement_connector(const ConnectorEdge& g, const CycleConfiguration& cfg,
                                   Vertex v2, Vertex u2) {
    ConnectorType want = complementary(g.typ);
    auto vs = v_link_sides(cfg, g.i, v2);
    auto us = u_link_sides(cfg, g.j, u2);
    if (!type_matches(want, vs, us))
        throw CannotComplement("link vertices do not realize the complementary type");
    if (set_contains(g.g, v2) || set_contains(g.g, u2))
        throw CannotComplement("link vertex lies inside the original connector");
    std::vector<Vertex> fill;
    for (Vertex x : set_minus(cfg.e_interior(g.i), g.g)) fill.push_back(x);
    for (Vertex x : set_minus(cfg.f_interior(g.j), g.g)) fill.push_back(x);
    for (Vertex x : set_minus(Edge(cfg.W.begin(), cfg.W.end()), g.g)) fill.push_back(x);
    int k = cfg.k();
    std::vector<Vertex> vs2 = {v2, u2};
    for (Vertex x : fill) {
        if ((int)vs2.size() == k) break;
        if (x == v2 || x == u2) continue;
        vs2.push_back(x);
    }
    if ((int)vs2.size() != k) throw CannotComplement("not enough free vertices to fill");
    Edge gp = sorted(vs2);
    auto ce = classify_as(gp, cfg, g.i, g.j, want);
    if (!ce) throw CannotComplement("filled edge failed to classify");
    if (!set_disjoint(gp, g.g)) throw CannotComplement("complement not disjoint");
    return *ce;
}

LooseCycle merge_cycles(const CycleConfiguration& cfg, const ConnectorEdge& ga,
                        const ConnectorEdge& gb) {
    if (!set_disjoint(ga.g, gb.g)) throw NotDisjoint("connectors overlap");
    if (ga.i != gb.i || ga.j != gb.j) throw InvalidInput("connectors sit at different (i,j)");
    if (gb.typ != complementary(ga.typ)) throw InvalidInput("connectors are not complementary");
    int l1 = cfg.l1(), l2 = cfg.l2();
    auto run1 = [&](bool rev) {
        std::vector<Edge> out;
        for (int t = 1; t < l1; ++t) out.push_back(cfg.e(rev ? ga.i - t : ga.i + t));
        return out;
    };
    auto run2 = [&](bool rev) {
        std::vector<Edge> out;
        for (int t = 1; t < l2; ++t) out.push_back(cfg.f(rev ? ga.j - t : ga.j + t));
        return out;
    };
    for (int swap_conn = 0; swap_conn < 2; ++swap_conn) {
        const Edge& first = swap_conn ? gb.g : ga.g;
        const Edge& second = swap_conn ? ga.g : gb.g;
        for (int o = 0; o < 4; ++o) {
            bool rev1 = o & 1, rev2 = o & 2;
            std::vector<Edge> seq = run1(rev1);
            seq.push_back(first);
            auto r2 = run2(rev2);
            seq.insert(seq.end(), r2.begin(), r2.end());
            seq.push_back(second);
            auto res = validate(seq, StructureKind::Cycle);
            if (res.ok) return *res.cycle;
        }
    }
    throw MergeBug("no orientation of the splice validates");
}

}  // namespace ramsey
