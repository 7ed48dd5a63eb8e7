#pragma once

// Exact monochromatic loose path/cycle detection and the small-case Ramsey
// oracles built on it.

#include <optional>

#include "ramsey/core.hpp"

namespace ramsey {

struct ArrowVerdict {
    bool holds = false;
    std::optional<std::pair<Color, LooseCycle>> witness;
    std::optional<KUniformColoring> counterexample;
};

// Deterministic backtracking search: extends partial loose structures
// edge-by-edge in colex order. Returns a validated monochromatic copy or
// nullopt when none exists.
std::optional<LooseCycle> find_mono_cycle(const KUniformColoring& c, Color col, int n);
std::optional<LoosePath> find_mono_path(const KUniformColoring& c, Color col, int n);

// holds iff c contains a red C^k_n or a blue C^k_m.
ArrowVerdict arrows(const KUniformColoring& c, int n, int m);

struct ExhaustiveResult {
    bool all_arrow = false;
    std::optional<KUniformColoring> counterexample;
    uint64_t colorings_checked = 0;
};

// Checks every 2-coloring of K^k_N. Requires C(N,k) <= budget_bits.
ExhaustiveResult ramsey_exhaustive(int k, int n, int m, int N, int budget_bits = 24);

struct EvidenceReport {
    int k = 0, n = 0, m = 0, N = 0;
    uint64_t seed = 0;
    int trials_run = 0;
    double p_red = 0.5;
    std::vector<uint64_t> failure_seeds;             // per-trial seeds that failed to arrow
    std::vector<KUniformColoring> failures;          // the failing colorings themselves
};

// Samples `trials` seeded random colorings (trial t uses splitmix64(seed + t))
// and records any that fail to arrow (C^k_n, C^k_m).
EvidenceReport ramsey_randomized(int k, int n, int m, int N, int trials, uint64_t seed,
                                 double p_red = 0.5);

// All distinct copies of C^k_n (unordered edge sets, i.e. up to
// rotation/reflection) in the complete hypergraph on N vertices, as sorted
// sets of colex edge ranks. Deterministically ordered.
std::vector<std::vector<uint64_t>> cycle_copy_rank_sets(int N, int k, int n);
std::vector<std::vector<uint64_t>> path_copy_rank_sets(int N, int k, int n);

}  // namespace ramsey
