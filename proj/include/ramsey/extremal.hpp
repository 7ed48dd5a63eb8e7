#pragma once

// Split lower-bound colorings and their pigeonhole certificates.

#include "ramsey/core.hpp"

namespace ramsey {

struct SplitCertificate {
    int N = 0, k = 0;
    int a = 0;         // A = {0..a-1}
    int b = 0;         // B = {a..a+b-1}, a + b = N
    int n = 0;         // red target length
    int m = 0;         // blue target length
    StructureKind kind = StructureKind::Cycle;
};

struct CertificateCheck {
    bool valid = false;
    std::string violation;  // empty when valid
};

// Coloring on N = (k-1)n + floor((m-1)/2) - 1 vertices: Red iff edge within
// A = {0..(k-1)n-2}. One vertex short of the conjectured Ramsey number.
std::pair<KUniformColoring, SplitCertificate> split_coloring_cycles(int k, int n, int m);

// Path variant on N = (k-1)n + floor((m+1)/2) - 1 vertices, |A| = (k-1)n.
std::pair<KUniformColoring, SplitCertificate> split_coloring_paths(int k, int n, int m);

// Valid iff (a) every red edge is inside A, (b) every blue edge meets B and
// (c) the cardinality inequalities hold: |A| small enough that no red target
// fits, 2|B| < m so that no blue target can place a B-vertex in every edge.
CertificateCheck check_certificate(const KUniformColoring& c, const SplitCertificate& cert,
                                   uint64_t enumeration_budget = (1ull << 26));

}  // namespace ramsey
