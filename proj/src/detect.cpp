#include "ramsey/detect.hpp"

#include <algorithm>
#include <set>

namespace ramsey {

namespace {

// enumerate r-subsets of pool (ascending values) in index-lexicographic order
template <typename F>
bool for_each_subset(const std::vector<Vertex>& pool, int r, F&& fn) {
    int m = (int)pool.size();
    if (r > m) return false;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<Vertex> pick(r);
    while (true) {
        for (int i = 0; i < r; ++i) pick[i] = pool[idx[i]];
        if (fn(pick)) return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct PathSearch {
    const KUniformColoring* c = nullptr;
    Color col = Color::Red;
    int n = 0, k = 0, N = 0;
    bool enumerate_all = false;           // collect every copy instead of stopping
    std::vector<Edge> stack;
    std::vector<char> used;
    std::vector<std::vector<Edge>> found;

    bool edge_ok(const Edge& e) const { return c == nullptr || c->color(e) == col; }

    std::vector<Vertex> free_list() const {
        std::vector<Vertex> f;
        for (Vertex v = 0; v < N; ++v)
            if (!used[v]) f.push_back(v);
        return f;
    }

    bool emit() {
        found.push_back(stack);
        return !enumerate_all;
    }

    bool dfs_path(int depth, Vertex tail) {
        if (depth == n) return emit();
        auto pool = free_list();
        return for_each_subset(pool, k - 1, [&](const std::vector<Vertex>& pick) {
            Edge e = sorted([&] {
                std::vector<Vertex> vs = pick;
                vs.push_back(tail);
                return vs;
            }());
            if (!edge_ok(e)) return false;
            for (Vertex v : pick) used[v] = 1;
            stack.push_back(e);
            bool done = false;
            if (depth + 1 == n) {
                done = emit();
            } else {
                for (Vertex t2 : pick) {
                    if (dfs_path(depth + 1, t2)) {
                        done = true;
                        break;
                    }
                }
            }
            stack.pop_back();
            for (Vertex v : pick) used[v] = 0;
            return done;
        });
    }

    bool dfs_cycle(int depth, Vertex tail, Vertex anchor) {
        auto pool = free_list();
        if (depth == n - 1) {
            return for_each_subset(pool, k - 2, [&](const std::vector<Vertex>& pick) {
                Edge e = sorted([&] {
                    std::vector<Vertex> vs = pick;
                    vs.push_back(tail);
                    vs.push_back(anchor);
                    return vs;
                }());
                if (!edge_ok(e)) return false;
                stack.push_back(e);
                bool done = emit();
                stack.pop_back();
                return done;
            });
        }
        return for_each_subset(pool, k - 1, [&](const std::vector<Vertex>& pick) {
            Edge e = sorted([&] {
                std::vector<Vertex> vs = pick;
                vs.push_back(tail);
                return vs;
            }());
            if (!edge_ok(e)) return false;
            for (Vertex v : pick) used[v] = 1;
            stack.push_back(e);
            bool done = false;
            for (Vertex t2 : pick) {
                if (dfs_cycle(depth + 1, t2, anchor)) {
                    done = true;
                    break;
                }
            }
            stack.pop_back();
            for (Vertex v : pick) used[v] = 0;
            return done;
        });
    }

    void run_paths() {
        used.assign(N, 0);
        uint64_t total = binom(N, k);
        for (uint64_t r = 0; r < total; ++r) {
            Edge e0 = colex_unrank(r, N, k);
            if (!edge_ok(e0)) continue;
            for (Vertex v : e0) used[v] = 1;
            stack.assign(1, e0);
            bool done = false;
            if (n == 1) {
                done = emit();
            } else {
                for (Vertex tail : e0) {
                    if (dfs_path(1, tail)) {
                        done = true;
                        break;
                    }
                }
            }
            stack.clear();
            for (Vertex v : e0) used[v] = 0;
            if (done && !enumerate_all) return;
        }
    }

    void run_cycles() {
        used.assign(N, 0);
        uint64_t total = binom(N, k);
        for (uint64_t r = 0; r < total; ++r) {
            Edge e0 = colex_unrank(r, N, k);
            if (!edge_ok(e0)) continue;
            for (Vertex v : e0) used[v] = 1;
            stack.assign(1, e0);
            bool done = false;
            if (n == 2) {
                for (size_t ai = 0; ai < e0.size() && !done; ++ai)
                    for (size_t bi = ai + 1; bi < e0.size() && !done; ++bi) {
                        auto pool = free_list();
                        done = for_each_subset(pool, k - 2, [&](const std::vector<Vertex>& pick) {
                            Edge e1 = sorted([&] {
                                std::vector<Vertex> vs = pick;
                                vs.push_back(e0[ai]);
                                vs.push_back(e0[bi]);
                                return vs;
                            }());
                            if (!edge_ok(e1)) return false;
                            stack.push_back(e1);
                            bool d = emit();
                            stack.pop_back();
                            return d;
                        });
                    }
            } else {
                for (size_t si = 0; si < e0.size() && !done; ++si)
                    for (size_t ti = 0; ti < e0.size() && !done; ++ti) {
                        if (si == ti) continue;
                        if (e0[si] > e0[ti]) continue;  // orientation symmetry
                        done = dfs_cycle(1, e0[ti], e0[si]);
                    }
            }
            stack.clear();
            for (Vertex v : e0) used[v] = 0;
            if (done && !enumerate_all) return;
        }
    }
};

}  // namespace

std::optional<LooseCycle> find_mono_cycle(const KUniformColoring& c, Color col, int n) {
    if (n < 2) throw InvalidParameters("loose cycles need n >= 2");
    if ((uint64_t)n * (c.k() - 1) > (uint64_t)c.N()) return std::nullopt;
    PathSearch s;
    s.c = &c;
    s.col = col;
    s.n = n;
    s.k = c.k();
    s.N = c.N();
    s.run_cycles();
    if (s.found.empty()) return std::nullopt;
    auto res = validate(s.found.front(), StructureKind::Cycle);
    if (!res.ok) throw ConstructionError("detector produced an invalid cycle: " + res.reason);
    return *res.cycle;
}

std::optional<LoosePath> find_mono_path(const KUniformColoring& c, Color col, int n) {
    if (n < 1) throw InvalidParameters("loose paths need n >= 1");
    if ((uint64_t)n * (c.k() - 1) + 1 > (uint64_t)c.N()) return std::nullopt;
    PathSearch s;
    s.c = &c;
    s.col = col;
    s.n = n;
    s.k = c.k();
    s.N = c.N();
    s.run_paths();
    if (s.found.empty()) return std::nullopt;
    auto res = validate(s.found.front(), StructureKind::Path);
    if (!res.ok) throw ConstructionError("detector produced an invalid path: " + res.reason);
    return *res.path;
}

ArrowVerdict arrows(const KUniformColoring& c, int n, int m) {
    ArrowVerdict v;
    if (auto red = find_mono_cycle(c, Color::Red, n)) {
        v.holds = true;
        v.witness = {Color::Red, *red};
        return v;
    }
    if (auto blue = find_mono_cycle(c, Color::Blue, m)) {
        v.holds = true;
        v.witness = {Color::Blue, *blue};
        return v;
    }
    v.holds = false;
    v.counterexample = c;
    return v;
}

namespace {

std::vector<std::vector<uint64_t>> copies_to_rank_sets(const std::vector<std::vector<Edge>>& raw,
                                                       int N, int k, StructureKind kind) {
    std::set<std::vector<uint64_t>> uniq;
    for (const auto& edges : raw) {
        auto res = validate(edges, kind);
        if (!res.ok) throw ConstructionError("copy enumerator made an invalid structure");
        std::vector<uint64_t> rs;
        for (const Edge& e : edges) rs.push_back(colex_rank(e, N, k));
        std::sort(rs.begin(), rs.end());
        uniq.insert(rs);
    }
    return {uniq.begin(), uniq.end()};
}

}  // namespace

std::vector<std::vector<uint64_t>> cycle_copy_rank_sets(int N, int k, int n) {
    if (n < 2 || k < 3) throw InvalidParameters("cycle copies need n >= 2, k >= 3");
    if ((uint64_t)n * (k - 1) > (uint64_t)N) return {};
    PathSearch s;
    s.c = nullptr;
    s.n = n;
    s.k = k;
    s.N = N;
    s.enumerate_all = true;
    s.run_cycles();
    return copies_to_rank_sets(s.found, N, k, StructureKind::Cycle);
}

std::vector<std::vector<uint64_t>> path_copy_rank_sets(int N, int k, int n) {
    if (n < 1 || k < 2) throw InvalidParameters("path copies need n >= 1, k >= 2");
    if ((uint64_t)n * (k - 1) + 1 > (uint64_t)N) return {};
    PathSearch s;
    s.c = nullptr;
    s.n = n;
    s.k = k;
    s.N = N;
    s.enumerate_all = true;
    s.run_paths();
    return copies_to_rank_sets(s.found, N, k, StructureKind::Path);
}

namespace {

std::vector<uint64_t> masks_of(const std::vector<std::vector<uint64_t>>& copies) {
    std::vector<uint64_t> out;
    out.reserve(copies.size());
    for (const auto& rs : copies) {
        uint64_t m = 0;
        for (uint64_t r : rs) m |= 1ull << r;
        out.push_back(m);
    }
    return out;
}

KUniformColoring coloring_from_word(uint64_t word, int N, int k, uint64_t bits) {
    std::vector<uint8_t> bytes((bits + 7) / 8, 0);
    for (uint64_t r = 0; r < bits; ++r)
        if (word >> r & 1) bytes[r >> 3] |= (uint8_t)(1u << (r & 7));
    return KUniformColoring::bitmap(N, k, std::move(bytes));
}

}  // namespace

ExhaustiveResult ramsey_exhaustive(int k, int n, int m, int N, int budget_bits) {
    uint64_t bits = binom(N, k);
    if (budget_bits < 1 || budget_bits > 63) throw InvalidParameters("budget must be in 1..63");
    if (bits > (uint64_t)budget_bits)
        throw BudgetExceeded("C(N,k) = " + std::to_string(bits) + " exceeds budget of " +
                             std::to_string(budget_bits) + " bits");
    auto red_masks = masks_of(cycle_copy_rank_sets(N, k, n));
    auto blue_masks = masks_of(cycle_copy_rank_sets(N, k, m));
    ExhaustiveResult out;
    uint64_t count = 1ull << bits;
    for (uint64_t x = 0; x < count; ++x) {
        bool arrow = false;
        for (uint64_t rm : red_masks)
            if ((x & rm) == rm) {
                arrow = true;
                break;
            }
        if (!arrow)
            for (uint64_t bm : blue_masks)
                if ((x & bm) == 0) {
                    arrow = true;
                    break;
                }
        ++out.colorings_checked;
        if (!arrow) {
            out.all_arrow = false;
            out.counterexample = coloring_from_word(x, N, k, bits);
            return out;
        }
    }
    out.all_arrow = true;
    return out;
}

EvidenceReport ramsey_randomized(int k, int n, int m, int N, int trials, uint64_t seed,
                                 double p_red) {
    if (trials < 1) throw InvalidParameters("trials must be >= 1");
    EvidenceReport rep;
    rep.k = k;
    rep.n = n;
    rep.m = m;
    rep.N = N;
    rep.seed = seed;
    rep.p_red = p_red;
    uint64_t bits = binom(N, k);
    bool use_masks = bits <= 63;
    std::vector<uint64_t> red_masks, blue_masks;
    if (use_masks) {
        red_masks = masks_of(cycle_copy_rank_sets(N, k, n));
        blue_masks = masks_of(cycle_copy_rank_sets(N, k, m));
    }
    for (int t = 0; t < trials; ++t) {
        uint64_t trial_seed = splitmix64(seed + (uint64_t)t);
        KUniformColoring c = random_coloring(N, k, trial_seed, p_red);
        bool arrow;
        if (use_masks) {
            auto bytes = c.materialize_bits();
            uint64_t x = 0;
            for (uint64_t r = 0; r < bits; ++r)
                if (bytes[r >> 3] >> (r & 7) & 1) x |= 1ull << r;
            arrow = false;
            for (uint64_t rm : red_masks)
                if ((x & rm) == rm) {
                    arrow = true;
                    break;
                }
            if (!arrow)
                for (uint64_t bm : blue_masks)
                    if ((x & bm) == 0) {
                        arrow = true;
                        break;
                    }
        } else {
            arrow = arrows(c, n, m).holds;
        }
        ++rep.trials_run;
        if (!arrow) {
            rep.failure_seeds.push_back(trial_seed);
            rep.failures.push_back(c);
        }
    }
    return rep;
}

}  // namespace ramsey
