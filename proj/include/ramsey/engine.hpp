#pragma once

// The constructive lemma engine. Every operation is total on inputs meeting
// its preconditions and returns either the lemma's red structure or an
// explicit blue cycle witness, with the probe sequence recorded. Hypotheses
// ("no blue C_{l1+l2}") are never assumed: each place a proof says an edge
// "must be" some color becomes a probe, and every contradiction terminal
// returns the merged blue cycle built from the two disjoint complementary
// blue connectors in hand.

#include <optional>

#include "ramsey/connector.hpp"
#include "ramsey/core.hpp"

namespace ramsey {

struct ProbeRecord {
    Edge edge;
    Color color;
};

struct ProbeTrace {
    std::vector<ProbeRecord> probes;
};

struct Outcome {
    enum class Kind { RedPath, RedCycle, BlueCycle };
    Kind kind = Kind::BlueCycle;
    std::optional<LoosePath> red_path;
    std::optional<LooseCycle> red_cycle;
    std::optional<LooseCycle> blue_cycle;
    ProbeTrace trace;
};

// Smallest-case machinery: on any 2-coloring with at least 2k-2 vertices,
// return a monochromatic C^k_2 (walks a flip-one-vertex edge path between a
// red and a blue edge to locate two edges of distinct colors meeting in k-1
// vertices, then resolves via the bridging edge g = {v1,v2,v_{k+1}} + W).
std::pair<Color, LooseCycle> find_mono_c2(const KUniformColoring& c, ProbeTrace* trace = nullptr);

// Given an all-red C^k_n, return a red C^k_{n-1} (resp. C^k_{n-2}) or the
// explicit blue C^k_n built from the probe family f_1..f_n.
Outcome step_down_1(const KUniformColoring& c, const LooseCycle& C);
Outcome step_down_2(const KUniformColoring& c, const LooseCycle& C);  // needs n >= 4

struct P2Hypothesis {
    int i = 0, j = 0;                      // 0-based edge indices into C1, C2
    std::optional<Vertex> C;               // at most one interior vertex of e_i
    Vertex w1 = -1, w2 = -1;               // B = {w1,w2} inside W
    Vertex vprev = -1, vnext = -1;         // v' in e_{i-1}\{first}, v'' in e_{i+1}\{last}
    Vertex uprev = -1, unext = -1;         // u' in f_{j-1}\{first}, u'' in f_{j+1}\{last}
    int leftover_side = 1;                 // 0: leftover vertex in e_i, 1: in f_j
};

// Lemma "there is a P2": red 2-path with conditions (i)-(iii) and a leftover
// vertex on the designated side, or a blue C_{l1+l2}.
Outcome red_pair_path(const CycleConfiguration& cfg, const P2Hypothesis& hyp);

// Strengthened variant: no C, no B, both edges meet both interiors in >= 3.
Outcome red_pair_path_strong(const CycleConfiguration& cfg, int i, int j, Vertex vprev,
                             Vertex vnext, Vertex uprev, Vertex unext);

struct BranchPair {
    Edge g1, g1p, g1b;  // E1 = g1 g1p, F1 = g1 g1b share the first edge
    Vertex vbar = -1, ubar = -1;
    std::vector<Vertex> Bprime;
};

struct BranchOutcome {
    std::optional<BranchPair> pair;
    std::optional<LooseCycle> blue_cycle;
    ProbeTrace trace;
};

// Lemma "there is a P2:3": two red 2-paths sharing their first edge with the
// seven containment/overlap/distribution bullets, or a blue C_{l1+l2}.
BranchOutcome branch_paths(const CycleConfiguration& cfg, int i, int j,
                           const std::vector<Vertex>& B);

struct PathPair {
    Edge a, b;  // 2-path, `a` is the end that attaches toward the prefix
};

struct LadderState {
    int i0 = 0, j0 = 0;        // cycle indices carrying pair 1
    int t = 0;                 // pairs built so far
    std::vector<Edge> common;  // shared prefix, 2(t-1) edges
    PathPair lastE, lastF;     // E_t and F_t
    std::vector<Vertex> B_union;

    std::vector<Edge> Epath() const;
    std::vector<Edge> Fpath() const;
    const Edge& e_of(const CycleConfiguration& cfg, int step) const;  // e_{i0+step-1}
    const Edge& f_of(const CycleConfiguration& cfg, int step) const;
};

enum class LadderStage { Initial, Step, Final };

struct LadderOutcome {
    std::optional<LadderState> state;     // Initial / Step success
    std::optional<LoosePath> final_path;  // Final success
    std::optional<LooseCycle> blue_cycle;
    ProbeTrace trace;
};

// Lemma "there is a P:3": consumes a branch_paths pair at (i0,j0) (requires
// l1 >= 3) and produces the two red 4-paths E_2 = E_1 E_2, F_2 = E_1 F_2.
LadderOutcome ladder_initial(const CycleConfiguration& cfg, int i0, int j0,
                             const BranchPair& bp);

// Lemma "there is a P": extends a state satisfying P1/P2 by one pair.
LadderOutcome ladder_step(const CycleConfiguration& cfg, const LadderState& st);

// Lemma "there is a P:2": closes the ladder with a single pair through the
// fresh vertices v in e_{t+1}\{last}, u in f_{t+1}\{last}.
LadderOutcome ladder_final(const CycleConfiguration& cfg, const LadderState& st, Vertex v,
                           Vertex u);

// Half-cycle pipelines. C1, C2 are vertex-disjoint blue cycles of lengths
// ((n-1)/2, (n+1)/2) for odd n, (n/2-1, n/2+1) for even n, inside a coloring
// on (k-1)n + floor((n-1)/2) vertices. Returns a red C_{(n+1)/2} (resp.
// C_{n/2+1}) or a blue C_n.
Outcome half_cycle_odd(const KUniformColoring& c, const LooseCycle& C1, const LooseCycle& C2);
Outcome half_cycle_even(const KUniformColoring& c, const LooseCycle& C1, const LooseCycle& C2);

// ---- independent condition checkers (used by tests and asserted internally)

// empty string = all conditions hold, otherwise the violated condition.
std::string check_p2_conditions(const CycleConfiguration& cfg, const P2Hypothesis& hyp,
                                const LoosePath& P);
std::string check_p2_strong_conditions(const CycleConfiguration& cfg, int i, int j, Vertex vprev,
                                       Vertex vnext, Vertex uprev, Vertex unext,
                                       const LoosePath& P);
std::string check_branch_conditions(const CycleConfiguration& cfg, int i, int j,
                                    const std::vector<Vertex>& B, const BranchPair& bp);
std::string check_ladder_state(const CycleConfiguration& cfg, const LadderState& st);

}  // namespace ramsey
