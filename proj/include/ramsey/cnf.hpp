#pragma once

// DIMACS export for exact small-case verification and the conjectured-value
// formula. Variable r+1 is true iff the edge of colex rank r is red; every
// copy of the red target contributes an all-negative clause, every copy of
// the blue target an all-positive one. The instance is satisfiable exactly
// when some coloring avoids both targets, i.e. when N < R.

#include "ramsey/core.hpp"

namespace ramsey {

enum class RamseyShape { CC, PP, PC };

int conjectured_ramsey(int k, int n, int m, RamseyShape shape);

struct CnfInstance {
    int k = 0, n = 0, m = 0, N = 0;
    uint64_t var_count = 0;
    std::vector<std::vector<int64_t>> clauses;  // sorted, deduplicated
    uint64_t red_copies = 0, blue_copies = 0;

    std::string to_dimacs() const;
};

CnfInstance export_cnf(int k, int n, int m, int N, uint64_t copy_budget = 5'000'000);

// Parses a solver model (space/newline separated literals, optional leading
// "v" tags and SAT lines, terminated by 0 or EOF) into a coloring; throws
// InvalidModel if a clause is violated or a variable is unassigned.
KUniformColoring decode_model(const CnfInstance& inst, const std::string& model_text);

// true iff the coloring satisfies every clause of the instance
bool satisfies(const CnfInstance& inst, const KUniformColoring& c);

}  // namespace ramsey
