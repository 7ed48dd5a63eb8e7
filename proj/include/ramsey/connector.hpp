#pragma once

// Configurations of two disjoint blue loose cycles, connector edges between
// them (types A/B/C/D by which neighbouring cycle edges supply the two link
// vertices), complement connectors, and the merge that splices the two cycles
// into one of summed length through a disjoint complementary pair.

#include <optional>

#include "ramsey/core.hpp"

namespace ramsey {

enum class ConnectorType : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline ConnectorType complementary(ConnectorType t) {
    switch (t) {
        case ConnectorType::A: return ConnectorType::B;
        case ConnectorType::B: return ConnectorType::A;
        case ConnectorType::C: return ConnectorType::D;
        case ConnectorType::D: return ConnectorType::C;
    }
    throw Error("unreachable");
}

struct CycleConfiguration {
    KUniformColoring coloring;
    LooseCycle C1, C2;           // l2 >= l1 >= 2, vertex-disjoint, all edges blue
    std::vector<Vertex> W;       // vertices uncovered by C1 and C2, |W| >= 2

    int k() const { return coloring.k(); }
    int l1() const { return C1.n(); }
    int l2() const { return C2.n(); }
    const Edge& e(int i) const;  // cyclic 0-based access into C1
    const Edge& f(int j) const;  // cyclic 0-based access into C2
    Vertex e_first(int i) const;
    Vertex e_last(int i) const;
    Vertex f_first(int j) const;
    Vertex f_last(int j) const;
    std::vector<Vertex> e_interior(int i) const;
    std::vector<Vertex> f_interior(int j) const;
};

// Checks the Remark invariants (disjointness, blueness, W, lengths); throws
// InvalidInput on violation.
CycleConfiguration make_configuration(const KUniformColoring& coloring, const LooseCycle& C1,
                                      const LooseCycle& C2);

struct ConnectorEdge {
    Edge g;
    int i = 0, j = 0;              // edge indices into C1, C2 (0-based)
    std::vector<Vertex> E, F, Wp;  // E = E' + v', F = F' + u', Wp inside W
    Vertex vprime = -1, uprime = -1;
    ConnectorType typ = ConnectorType::A;
    int p = 0, q = 0, r = 0;       // |E|, |Wp|, |F|
};

// Decomposes g as E' + {v'} + W' + F' + {u'} against the pair (e_i, f_j) if
// possible; among multiple witnesses the smallest (v', u') pair wins, then
// A < B < C < D.
std::optional<ConnectorEdge> classify(const Edge& g, const CycleConfiguration& cfg, int i, int j);

// Like classify but only accepts the requested type.
std::optional<ConnectorEdge> classify_as(const Edge& g, const CycleConfiguration& cfg, int i,
                                         int j, ConnectorType want);

// Remark "edge complement": a connector of the complementary type through the
// requested link vertices, disjoint from g; slots fill from interior(e_i)\g,
// then interior(f_j)\g, then W\g, smallest ids first.
ConnectorEdge complement_connector(const ConnectorEdge& g, const CycleConfiguration& cfg,
                                   Vertex v2, Vertex u2);

// Splices C1 and C2 through a disjoint complementary pair into a validated
// loose cycle of length l1+l2 that reuses every cycle edge except e_i, f_j.
LooseCycle merge_cycles(const CycleConfiguration& cfg, const ConnectorEdge& ga,
                        const ConnectorEdge& gb);

}  // namespace ramsey
