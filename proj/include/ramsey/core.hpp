#pragma once

// Loose paths, loose cycles and 2-colorings of complete k-uniform hypergraphs.
// Vertices are 0-based ints; an Edge is a strictly increasing vector of k of them.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

using Vertex = int;
using Edge = std::vector<Vertex>;

enum class Color : uint8_t { Red, Blue };

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParameters : Error { using Error::Error; };
struct InvalidEdge : Error { using Error::Error; };
struct RankOutOfRange : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct TooFewVertices : Error { using Error::Error; };
struct NotDisjoint : Error { using Error::Error; };
struct CannotComplement : Error { using Error::Error; };
struct InvalidModel : Error { using Error::Error; };
struct MergeBug : Error { using Error::Error; };
struct ConstructionError : Error { using Error::Error; };

// ---- sorted-vector set helpers ----------------------------------------------

bool is_strict_sorted(const Edge& e);
Edge set_union(const Edge& a, const Edge& b);
Edge set_minus(const Edge& a, const Edge& b);
Edge set_inter(const Edge& a, const Edge& b);
bool set_contains(const Edge& a, Vertex v);
bool set_disjoint(const Edge& a, const Edge& b);
Edge sorted(std::vector<Vertex> vs);  // sorts and checks for duplicates

// ---- binomials and colex ranking --------------------------------------------

// Overflow-checked binomial coefficient; throws BudgetExceeded if the value
// does not fit in uint64.
uint64_t binom(int n, int k);

void check_edge(const Edge& e, int N, int k);  // throws InvalidEdge

// Colex order: compare largest differing element. rank is a bijection onto
// [0, C(N,k)).
uint64_t colex_rank(const Edge& e, int N, int k);
Edge colex_unrank(uint64_t r, int N, int k);

// ---- loose structures --------------------------------------------------------

// Both structures keep their edges in traversal order plus a vertex_order in
// which edge i occupies positions [i*(k-1), i*(k-1)+k) (cyclically for cycles).
struct LoosePath {
    std::vector<Edge> edges;
    std::vector<Vertex> vertex_order;  // n(k-1)+1 distinct vertices

    int n() const { return (int)edges.size(); }
    int k() const { return edges.empty() ? 0 : (int)edges[0].size(); }
    Vertex first_of(int i) const;
    Vertex last_of(int i) const;
    std::vector<Vertex> vertices() const { return sorted(vertex_order); }
};

struct LooseCycle {
    std::vector<Edge> edges;
    std::vector<Vertex> vertex_order;  // n(k-1) distinct vertices

    int n() const { return (int)edges.size(); }
    int k() const { return edges.empty() ? 0 : (int)edges[0].size(); }
    Vertex first_of(int i) const;
    Vertex last_of(int i) const;
    // 1-based canonical position accessor, wraps mod n(k-1).
    Vertex at(long long pos) const;
    std::vector<Vertex> vertices() const { return sorted(vertex_order); }
};

enum class StructureKind { Path, Cycle };

struct ValidationResult {
    bool ok = false;
    std::string reason;
    std::optional<LoosePath> path;
    std::optional<LooseCycle> cycle;
};

// Checks the loose path/cycle conditions (n=2 cycles share exactly two
// vertices) and returns the normalized structure: cycles are rotated/reflected
// so the vertex_order is lexicographically minimal, paths take the smaller of
// the two directions, interiors sorted ascending.
ValidationResult validate(const std::vector<Edge>& edges, StructureKind kind);

LooseCycle canonical_loose_cycle(int n, int k);
LoosePath canonical_loose_path(int n, int k);

LooseCycle normalize(const LooseCycle& c);
LoosePath normalize(const LoosePath& p);

bool same_cycle(const LooseCycle& a, const LooseCycle& b);

// ---- colorings ---------------------------------------------------------------

// Total red/blue coloring of all k-subsets of {0..N-1}. Either materialized
// (bitmap over colex ranks, bit=1 means red) or rule-defined (split / seeded
// hash), plus an in-memory overlay used to plant structures in tests.
class KUniformColoring {
public:
    enum class Mode { Bitmap, Split, Hash, Overlay };

    static KUniformColoring bitmap(int N, int k, std::vector<uint8_t> bits);
    static KUniformColoring split(int N, int k, int a);  // red iff edge within {0..a-1}
    static KUniformColoring hash_rule(int N, int k, uint64_t seed, uint32_t num, uint32_t den);
    static KUniformColoring all_red(int N, int k) { return split(N, k, N); }
    static KUniformColoring all_blue(int N, int k) { return split(N, k, 0); }

    KUniformColoring with_forced(const std::vector<std::pair<Edge, Color>>& forced) const;
    KUniformColoring with_forced(const std::vector<Edge>& edges, Color c) const;

    Color color(const Edge& e) const;
    int N() const;
    int k() const;
    Mode mode() const;

    uint64_t edge_count() const;  // C(N,k)
    // Materializes the bitmap (throws BudgetExceeded past max_bits).
    std::vector<uint8_t> materialize_bits(uint64_t max_bits = (1ull << 26)) const;

    std::string to_lrc() const;  // overlay colorings are not serializable
    static KUniformColoring from_lrc(const std::string& text);

    // rule accessors (valid for the matching mode)
    int split_a() const;
    uint64_t hash_seed() const;
    uint32_t hash_num() const;
    uint32_t hash_den() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit KUniformColoring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

// Deterministic PRNG used everywhere an edge needs a pseudo-random color:
// bit(seed, r) = splitmix64(seed ^ splitmix64(r + 1)) mod den < num.
uint64_t splitmix64(uint64_t x);
uint64_t edge_hash(uint64_t seed, uint64_t rank);

// Materialized seeded coloring, bit-identical across runs for fixed
// (N, k, seed, p_red): red iff edge_hash(seed, rank) % 1000000 < round(p*1e6).
KUniformColoring random_coloring(int N, int k, uint64_t seed, double p_red);

}  // namespace ramsey
