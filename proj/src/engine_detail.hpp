#pragma once

// Internal machinery shared by the engine translation units: probe context,
// canonical frames around an (e_i, f_j) pair, and the merge fallback used by
// every ladder terminal.

#include "ramsey/engine.hpp"

namespace ramsey::detail {

inline int wrap(int i, int n) { return ((i % n) + n) % n; }

struct Ctx {
    const KUniformColoring& col;
    ProbeTrace trace;

    explicit Ctx(const KUniformColoring& c) : col(c) {}
    Color probe(const Edge& e) {
        Color c = col.color(e);
        trace.probes.push_back({e, c});
        return c;
    }
    bool red(const Edge& e) { return probe(e) == Color::Red; }
};

// Canonical position labelling of the pair (e_i, f_j): X[p], Y[p] for p = 1..k,
// X[1]/X[k] the first/last vertex in the frame's orientation. Links vP/vN/uP/uN
// play the roles of v'/v''/u'/u''. Cv is the C-vertex pinned at X-position k-1.
struct Frame {
    int k = 0;
    std::vector<Vertex> X, Y;  // size k+1, slot 0 unused
    Vertex vP = -1, vN = -1, uP = -1, uN = -1;
    Vertex w1 = -1, w2 = -1, w3 = -1;
    Vertex Cv = -1;
};

std::vector<int> rng(int a, int b);

// sorted edge from frame positions plus explicit vertices
Edge frame_edge(const Frame& fr, const std::vector<int>& xpos, const std::vector<int>& ypos,
                const std::vector<Vertex>& extra);
Edge frame_all(const Frame& fr, const std::vector<Vertex>& extra);

Edge replace_one(const Edge& h, Vertex out, Vertex in);

struct FrameSpec {
    int i = 0, j = 0;
    bool swap_sides = false;  // X drawn from f_j, Y from e_i
    bool rev_x = false, rev_y = false;
    // where a seed edge's interiors go: X low / Y high is the A-form default,
    // the mirrored ladders for B-form seeds flip both
    bool h_x_low = true, h_y_high = true;
    Vertex vP = -1, vN = -1, uP = -1, uN = -1;
    std::optional<Vertex> Cvert;
    Vertex w1 = -1, w2 = -1, w3 = -1;
};

// Builds the frame; when h is given its X-side interior vertices take the low
// positions 2.. and its Y-side interiors the top positions ..k-1 (the ladder
// normal form), otherwise interiors are assigned ascending. Cvert always maps
// to X-position k-1 (it must not lie in h).
Frame build_frame(const CycleConfiguration& cfg, const FrameSpec& spec, const Edge* h);

// Merge fallback: both edges are blue connectors at (i,j) of complementary
// types; tries (A,B),(B,A),(C,D),(D,C).
LooseCycle merge_blue(const CycleConfiguration& cfg, int i, int j, const Edge& a, const Edge& b);

// Ordered 2-path with `a` first; throws ConstructionError when not a 2-path.
LoosePath ordered_pair_path(const Edge& a, const Edge& b);
LoosePath ordered_path(const std::vector<Edge>& edges);  // general ordered loose path
LooseCycle ordered_cycle(const std::vector<Edge>& edges);

void assert_mono(const KUniformColoring& c, const std::vector<Edge>& edges, Color col,
                 const char* what);

// ---- the "there is a P2" probe ladder ----------------------------------------

enum class P2Mode { Weak, Strong, Final };

struct P2Result {
    bool is_blue = false;
    std::optional<LooseCycle> blue;
    Edge ga, gb;  // red pair in output order
};

// Runs the claim ladder for a blue h1 (the frame's canonical A-form edge).
// l = |C| (0 unless Weak), leftover_side: 0 = X-side leftover, 1 = Y-side.
// fconn (Final mode only): the f-side path connection carried by the
// late-step partners in place of uP.
P2Result p2_ladder(Ctx& ctx, const CycleConfiguration& cfg, const Frame& fr, int i, int j,
                   P2Mode mode, int l, int leftover_side, Vertex fconn = -1);

// Canonical favorable edges of the P2 lemma in a frame.
Edge p2_h1(const Frame& fr, int l);
Edge p2_g2(const Frame& fr, int l, int leftover_side);

// implementation entry points sharing one probe context
Outcome red_pair_path_impl(Ctx& ctx, const CycleConfiguration& cfg, const P2Hypothesis& hyp);
BranchOutcome branch_paths_impl(Ctx& ctx, const CycleConfiguration& cfg, int i, int j,
                                const std::vector<Vertex>& B);
LadderOutcome ladder_initial_impl(Ctx& ctx, const CycleConfiguration& cfg, int i0, int j0,
                                  const BranchPair& bp);
LadderOutcome ladder_step_impl(Ctx& ctx, const CycleConfiguration& cfg, const LadderState& st);
LadderOutcome ladder_final_impl(Ctx& ctx, const CycleConfiguration& cfg, const LadderState& st,
                                Vertex v, Vertex u);

Vertex pick_min_in(const Edge& pool, const Edge& avoid);
// picks by canonical cycle position (highest or lowest index)
Vertex pick_by_pos(const LooseCycle& cyc, const Edge& pool, bool maximum);

}  // namespace ramsey::detail
