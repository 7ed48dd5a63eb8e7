#pragma once

// Seeded randomized trial drivers for the lemma engine: build random
// configurations (cycles planted on shuffled vertex sets, rule-defined
// background colorings), run an engine operation, and verify every outcome
// with the independent checkers.

#include "ramsey/connector.hpp"
#include "ramsey/engine.hpp"

namespace ramsey {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(splitmix64(seed ^ 0x5bd1e995u)) {}
    uint64_t next() {
        state = splitmix64(state);
        return state;
    }
    int below(int n) { return (int)(next() % (uint64_t)n); }
    bool coin() { return next() & 1; }
};

// A blue cycle pair planted on seeded-shuffled vertices over a hash-rule
// background with the cycle edges forced blue.
struct TrialSetup {
    KUniformColoring coloring;
    LooseCycle C1, C2;
};

TrialSetup make_trial_configuration(int k, int l1, int l2, int N, uint64_t seed, double p_red);
CycleConfiguration trial_cfg(const TrialSetup& s);

// Plants an all-red C^k_n on shuffled vertices inside a random coloring.
std::pair<KUniformColoring, LooseCycle> make_planted_red_cycle(int k, int n, int N, uint64_t seed,
                                                               double p_red);

struct LemmaTrialReport {
    int trials = 0;
    int red_outcomes = 0;
    int blue_outcomes = 0;
    int construction_errors = 0;
    std::vector<std::string> errors;  // first few failure descriptions
    // replayable record of the last completed trial
    ProbeTrace last_trace;
    std::string last_variant;
    std::vector<Edge> last_structure;
    bool ok() const { return construction_errors == 0 && (int)errors.size() == 0; }
};

// name: find_mono_c2 | step_down_1 | step_down_2 | red_pair_path |
// red_pair_path_strong | branch_paths | ladder_extend | half_cycle_odd |
// half_cycle_even | merge_cycles
LemmaTrialReport run_lemma_trials(const std::string& name, int k, int n, int l1, int l2,
                                  int trials, uint64_t seed, double p_red);

}  // namespace ramsey
