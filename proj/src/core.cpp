#include "ramsey/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramsey {

bool is_strict_sorted(const Edge& e) {
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i - 1] >= e[i]) return false;
    return true;
}

Edge set_union(const Edge& a, const Edge& b) {
    Edge out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Edge set_minus(const Edge& a, const Edge& b) {
    Edge out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Edge set_inter(const Edge& a, const Edge& b) {
    Edge out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const Edge& a, Vertex v) {
    return std::binary_search(a.begin(), a.end(), v);
}

bool set_disjoint(const Edge& a, const Edge& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else return false;
    }
    return true;
}

Edge sorted(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    for (size_t i = 1; i < vs.size(); ++i)
        if (vs[i - 1] == vs[i]) throw InvalidEdge("duplicate vertex " + std::to_string(vs[i]));
    return vs;
}

uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        uint64_t num = (uint64_t)(n - k + i);
        // r * num must not overflow
        if (r > UINT64_MAX / num) throw BudgetExceeded("binomial overflow");
        r = r * num / (uint64_t)i;
    }
    return r;
}

void check_edge(const Edge& e, int N, int k) {
    if ((int)e.size() != k) throw InvalidEdge("edge has wrong size");
    if (!is_strict_sorted(e)) throw InvalidEdge("edge not strictly increasing");
    if (!e.empty() && (e.front() < 0 || e.back() >= N)) throw InvalidEdge("vertex out of range");
}

uint64_t colex_rank(const Edge& e, int N, int k) {
    check_edge(e, N, k);
    uint64_t r = 0;
    for (int i = 0; i < k; ++i) r += binom(e[i], i + 1);
    return r;
}

Edge colex_unrank(uint64_t r, int N, int k) {
    if (k <= 0 || N < k) throw InvalidParameters("bad N,k");
    if (r >= binom(N, k)) throw RankOutOfRange("rank " + std::to_string(r));
    Edge e(k);
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (binom(c + 1, i) <= r) ++c;
        e[i - 1] = c;
        r -= binom(c, i);
    }
    return e;
}

// ---- loose structures --------------------------------------------------------

Vertex LoosePath::first_of(int i) const {
    if (i < 0 || i >= n()) throw IndexError("path edge index");
    return vertex_order[(size_t)i * (k() - 1)];
}

Vertex LoosePath::last_of(int i) const {
    if (i < 0 || i >= n()) throw IndexError("path edge index");
    return vertex_order[(size_t)i * (k() - 1) + k() - 1];
}

Vertex LooseCycle::first_of(int i) const {
    if (i < 0 || i >= n()) throw IndexError("cycle edge index");
    return vertex_order[(size_t)i * (k() - 1) % vertex_order.size()];
}

Vertex LooseCycle::last_of(int i) const {
    if (i < 0 || i >= n()) throw IndexError("cycle edge index");
    return vertex_order[((size_t)i * (k() - 1) + k() - 1) % vertex_order.size()];
}

Vertex LooseCycle::at(long long pos) const {
    long long m = (long long)vertex_order.size();
    long long q = ((pos - 1) % m + m) % m;
    return vertex_order[(size_t)q];
}

namespace {

std::vector<Vertex> cycle_vertex_order(const std::vector<Edge>& edges,
                                       const std::vector<Vertex>& conn) {
    // conn[i] = vertex shared by edges[i] and edges[i+1 mod n]
    std::vector<Vertex> vo;
    int n = (int)edges.size();
    for (int i = 0; i < n; ++i) {
        Vertex prev = conn[(i + n - 1) % n];
        Edge interior = set_minus(edges[i], sorted({prev, conn[i]}));
        vo.push_back(prev);
        for (Vertex v : interior) vo.push_back(v);
    }
    return vo;
}

}  // namespace

ValidationResult validate(const std::vector<Edge>& edges, StructureKind kind) {
    ValidationResult res;
    auto fail = [&](const std::string& why) {
        res.ok = false;
        res.reason = why;
        return res;
    };
    int n = (int)edges.size();
    if (n == 0) return fail("no edges");
    int k = (int)edges[0].size();
    if (k < 2) return fail("uniformity below 2");
    for (const Edge& e : edges) {
        if ((int)e.size() != k) return fail("edges of mixed sizes");
        if (!is_strict_sorted(e)) return fail("edge not a strictly increasing vertex set");
    }
    Edge all;
    for (const Edge& e : edges) all = set_union(all, e);

    if (kind == StructureKind::Path) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                size_t expect = (j == i + 1) ? 1 : 0;
                if (set_inter(edges[i], edges[j]).size() != expect)
                    return fail("edges " + std::to_string(i) + "," + std::to_string(j) +
                                " share wrong number of vertices");
            }
        if ((int)all.size() != n * (k - 1) + 1) return fail("wrong vertex count for a loose path");
        res.ok = true;
        LoosePath p;
        p.edges = edges;
        // forward and reverse candidates, pick lexicographically smaller order
        std::vector<Vertex> best;
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<Edge> es = edges;
            if (dir) std::reverse(es.begin(), es.end());
            std::vector<Vertex> conn(n > 1 ? n - 1 : 0);
            for (int i = 0; i + 1 < n; ++i) conn[i] = set_inter(es[i], es[i + 1])[0];
            std::vector<Vertex> vo;
            for (int i = 0; i < n; ++i) {
                Edge rest = es[i];
                if (i > 0) rest = set_minus(rest, Edge{conn[i - 1]});
                if (i + 1 < n) rest = set_minus(rest, Edge{conn[i]});
                if (i > 0) vo.push_back(conn[i - 1]);
                if (i == 0) {
                    vo.push_back(rest.front());
                    for (size_t t = 1; t < rest.size(); ++t) vo.push_back(rest[t]);
                } else {
                    for (Vertex v : rest) vo.push_back(v);
                }
            }
            if (best.empty() || vo < best) {
                best = vo;
                p.edges = es;
            }
        }
        p.vertex_order = best;
        res.path = std::move(p);
        return res;
    }

    // cycles
    if (n < 2) return fail("a loose cycle needs at least 2 edges");
    if (n == 2) {
        if (k < 3) return fail("a 2-edge loose cycle needs k >= 3");
        Edge shared = set_inter(edges[0], edges[1]);
        if (shared.size() != 2) return fail("the two edges must share exactly 2 vertices");
        if ((int)all.size() != 2 * (k - 1)) return fail("wrong vertex count for a loose 2-cycle");
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool adj = (j == i + 1) || (i == 0 && j == n - 1);
                size_t expect = adj ? 1 : 0;
                if (set_inter(edges[i], edges[j]).size() != expect)
                    return fail("edges " + std::to_string(i) + "," + std::to_string(j) +
                                " share wrong number of vertices");
            }
        if ((int)all.size() != n * (k - 1)) return fail("wrong vertex count for a loose cycle");
    }
    res.ok = true;
    LooseCycle c;
    std::vector<Vertex> best;
    std::vector<Edge> best_edges;
    if (n == 2) {
        Edge shared = set_inter(edges[0], edges[1]);
        for (int first = 0; first < 2; ++first)
            for (int lead = 0; lead < 2; ++lead) {
                std::vector<Edge> es = {edges[first], edges[1 - first]};
                Vertex a = shared[lead], b = shared[1 - lead];
                std::vector<Vertex> vo;
                vo.push_back(a);
                for (Vertex v : set_minus(es[0], shared)) vo.push_back(v);
                vo.push_back(b);
                for (Vertex v : set_minus(es[1], shared)) vo.push_back(v);
                if (best.empty() || vo < best) {
                    best = vo;
                    best_edges = es;
                }
            }
    } else {
        for (int rot = 0; rot < n; ++rot)
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<Edge> es(n);
                for (int i = 0; i < n; ++i) {
                    int idx = dir == 0 ? (rot + i) % n : (rot - i % n + 2 * n) % n;
                    es[i] = edges[idx];
                }
                std::vector<Vertex> conn(n);
                for (int i = 0; i < n; ++i) conn[i] = set_inter(es[i], es[(i + 1) % n])[0];
                std::vector<Vertex> vo = cycle_vertex_order(es, conn);
                if (best.empty() || vo < best) {
                    best = vo;
                    best_edges = es;
                }
            }
    }
    c.edges = best_edges;
    c.vertex_order = best;
    res.cycle = std::move(c);
    return res;
}

LooseCycle canonical_loose_cycle(int n, int k) {
    if (n < 2 || k < 3) throw InvalidParameters("canonical_loose_cycle needs n >= 2, k >= 3");
    int m = n * (k - 1);
    std::vector<Edge> edges(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> vs(k);
        for (int t = 0; t < k; ++t) vs[t] = (i * (k - 1) + t) % m;
        edges[i] = sorted(vs);
    }
    LooseCycle c;
    c.edges = edges;
    c.vertex_order.resize(m);
    for (int i = 0; i < m; ++i) c.vertex_order[i] = i;
    return c;
}

LoosePath canonical_loose_path(int n, int k) {
    if (n < 1 || k < 2) throw InvalidParameters("canonical_loose_path needs n >= 1, k >= 2");
    std::vector<Edge> edges(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> vs(k);
        for (int t = 0; t < k; ++t) vs[t] = i * (k - 1) + t;
        edges[i] = vs;
    }
    LoosePath p;
    p.edges = edges;
    p.vertex_order.resize(n * (k - 1) + 1);
    for (int i = 0; i < (int)p.vertex_order.size(); ++i) p.vertex_order[i] = i;
    return p;
}

LooseCycle normalize(const LooseCycle& c) {
    auto r = validate(c.edges, StructureKind::Cycle);
    if (!r.ok) throw InvalidInput("normalize: not a loose cycle: " + r.reason);
    return *r.cycle;
}

LoosePath normalize(const LoosePath& p) {
    auto r = validate(p.edges, StructureKind::Path);
    if (!r.ok) throw InvalidInput("normalize: not a loose path: " + r.reason);
    return *r.path;
}

bool same_cycle(const LooseCycle& a, const LooseCycle& b) {
    return normalize(a).vertex_order == normalize(b).vertex_order;
}

// ---- colorings ---------------------------------------------------------------

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t edge_hash(uint64_t seed, uint64_t rank) {
    return splitmix64(seed ^ splitmix64(rank + 1));
}

struct KUniformColoring::Impl {
    int N = 0, k = 0;
    Mode mode = Mode::Split;
    std::vector<uint8_t> bits;
    int split_a = 0;
    uint64_t hseed = 0;
    uint32_t hnum = 0, hden = 1;
    std::shared_ptr<const Impl> base;
    std::map<Edge, Color> forced;

    Color color(const Edge& e) const {
        switch (mode) {
            case Mode::Bitmap: {
                uint64_t r = colex_rank(e, N, k);
                return ((bits[r >> 3] >> (r & 7)) & 1) ? Color::Red : Color::Blue;
            }
            case Mode::Split:
                return (!e.empty() && e.back() < split_a) ? Color::Red : Color::Blue;
            case Mode::Hash: {
                uint64_t r = colex_rank(e, N, k);
                return (edge_hash(hseed, r) % hden < hnum) ? Color::Red : Color::Blue;
            }
            case Mode::Overlay: {
                auto it = forced.find(e);
                if (it != forced.end()) return it->second;
                return base->color(e);
            }
        }
        throw Error("unreachable");
    }
};

KUniformColoring KUniformColoring::bitmap(int N, int k, std::vector<uint8_t> bits) {
    if (N < 0 || k < 1) throw InvalidParameters("bitmap coloring needs N >= 0, k >= 1");
    uint64_t m = binom(N, k);
    if (bits.size() != (m + 7) / 8) throw InvalidParameters("bitmap has wrong length");
    auto impl = std::make_shared<Impl>();
    impl->N = N;
    impl->k = k;
    impl->mode = Mode::Bitmap;
    impl->bits = std::move(bits);
    return KUniformColoring(impl);
}

KUniformColoring KUniformColoring::split(int N, int k, int a) {
    if (N < 0 || k < 1) throw InvalidParameters("split coloring needs N >= 0, k >= 1");
    if (a < 0 || a > N) throw InvalidParameters("split size out of range");
    auto impl = std::make_shared<Impl>();
    impl->N = N;
    impl->k = k;
    impl->mode = Mode::Split;
    impl->split_a = a;
    return KUniformColoring(impl);
}

KUniformColoring KUniformColoring::hash_rule(int N, int k, uint64_t seed, uint32_t num,
                                             uint32_t den) {
    if (N < 0 || k < 1) throw InvalidParameters("hash coloring needs N >= 0, k >= 1");
    if (den == 0 || num > den) throw InvalidParameters("bad hash probability");
    auto impl = std::make_shared<Impl>();
    impl->N = N;
    impl->k = k;
    impl->mode = Mode::Hash;
    impl->hseed = seed;
    impl->hnum = num;
    impl->hden = den;
    return KUniformColoring(impl);
}

KUniformColoring KUniformColoring::with_forced(
    const std::vector<std::pair<Edge, Color>>& forced) const {
    auto impl = std::make_shared<Impl>();
    impl->N = N();
    impl->k = k();
    impl->mode = Mode::Overlay;
    impl->base = impl_;
    if (impl_->mode == Mode::Overlay) impl->forced = impl_->forced;  // flatten one level lazily
    for (auto& [e, c] : forced) {
        check_edge(e, N(), k());
        impl->forced[e] = c;
    }
    return KUniformColoring(impl);
}

KUniformColoring KUniformColoring::with_forced(const std::vector<Edge>& edges, Color c) const {
    std::vector<std::pair<Edge, Color>> f;
    for (const Edge& e : edges) f.emplace_back(e, c);
    return with_forced(f);
}

Color KUniformColoring::color(const Edge& e) const {
    check_edge(e, impl_->N, impl_->k);
    return impl_->color(e);
}

int KUniformColoring::N() const { return impl_->N; }
int KUniformColoring::k() const { return impl_->k; }
KUniformColoring::Mode KUniformColoring::mode() const { return impl_->mode; }
int KUniformColoring::split_a() const { return impl_->split_a; }
uint64_t KUniformColoring::hash_seed() const { return impl_->hseed; }
uint32_t KUniformColoring::hash_num() const { return impl_->hnum; }
uint32_t KUniformColoring::hash_den() const { return impl_->hden; }

uint64_t KUniformColoring::edge_count() const { return binom(impl_->N, impl_->k); }

std::vector<uint8_t> KUniformColoring::materialize_bits(uint64_t max_bits) const {
    uint64_t m = edge_count();
    if (m > max_bits) throw BudgetExceeded("materializing " + std::to_string(m) + " bits");
    std::vector<uint8_t> bits((m + 7) / 8, 0);
    for (uint64_t r = 0; r < m; ++r) {
        Edge e = colex_unrank(r, impl_->N, impl_->k);
        if (impl_->color(e) == Color::Red) bits[r >> 3] |= (uint8_t)(1u << (r & 7));
    }
    return bits;
}

std::string KUniformColoring::to_lrc() const {
    std::ostringstream out;
    switch (impl_->mode) {
        case Mode::Bitmap: {
            out << "LRC1 k=" << impl_->k << " N=" << impl_->N << " mode=bitmap\n";
            uint64_t m = edge_count();
            uint64_t digits = (m + 3) / 4;
            static const char* hex = "0123456789abcdef";
            std::string line;
            line.reserve(digits);
            for (uint64_t d = 0; d < digits; ++d) {
                int val = 0;
                for (int b = 0; b < 4; ++b) {
                    uint64_t r = d * 4 + b;
                    if (r < m && ((impl_->bits[r >> 3] >> (r & 7)) & 1)) val |= 1 << b;
                }
                line.push_back(hex[val]);
            }
            out << line << "\n";
            return out.str();
        }
        case Mode::Split:
            out << "LRC1 k=" << impl_->k << " N=" << impl_->N << " mode=rule\n";
            out << "rule=split A=" << impl_->split_a << " B=" << (impl_->N - impl_->split_a)
                << "\n";
            return out.str();
        case Mode::Hash:
            out << "LRC1 k=" << impl_->k << " N=" << impl_->N << " mode=rule\n";
            out << "rule=hash seed=" << impl_->hseed << " p=" << impl_->hnum << "/" << impl_->hden
                << "\n";
            return out.str();
        case Mode::Overlay:
            throw InvalidParameters("overlay colorings have no .lrc form");
    }
    throw Error("unreachable");
}

KUniformColoring KUniformColoring::from_lrc(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw InvalidParameters("empty .lrc input");
    int k = -1, N = -1;
    std::string modeword;
    {
        std::istringstream hs(header);
        std::string tag, kv;
        hs >> tag;
        if (tag != "LRC1") throw InvalidParameters(".lrc must start with LRC1");
        while (hs >> kv) {
            if (kv.rfind("k=", 0) == 0) k = std::stoi(kv.substr(2));
            else if (kv.rfind("N=", 0) == 0) N = std::stoi(kv.substr(2));
            else if (kv.rfind("mode=", 0) == 0) modeword = kv.substr(5);
        }
    }
    if (k <= 0 || N < 0) throw InvalidParameters(".lrc header has bad k/N");
    std::string line2;
    if (!std::getline(in, line2)) throw InvalidParameters(".lrc missing payload line");
    if (modeword == "bitmap") {
        uint64_t m = binom(N, k);
        uint64_t digits = (m + 3) / 4;
        if (line2.size() != digits) throw InvalidParameters(".lrc bitmap has wrong length");
        std::vector<uint8_t> bits((m + 7) / 8, 0);
        for (uint64_t d = 0; d < digits; ++d) {
            char c = (char)std::tolower(line2[d]);
            int val;
            if (c >= '0' && c <= '9') val = c - '0';
            else if (c >= 'a' && c <= 'f') val = 10 + (c - 'a');
            else throw InvalidParameters(".lrc bitmap has a non-hex digit");
            for (int b = 0; b < 4; ++b) {
                uint64_t r = d * 4 + b;
                if (r < m && (val >> b & 1)) bits[r >> 3] |= (uint8_t)(1u << (r & 7));
            }
        }
        return bitmap(N, k, std::move(bits));
    }
    if (modeword == "rule") {
        std::istringstream rs(line2);
        std::string word;
        rs >> word;
        if (word == "rule=split") {
            int a = -1, b = -1;
            while (rs >> word) {
                if (word.rfind("A=", 0) == 0) a = std::stoi(word.substr(2));
                else if (word.rfind("B=", 0) == 0) b = std::stoi(word.substr(2));
            }
            if (a < 0 || b < 0 || a + b != N) throw InvalidParameters("bad split rule");
            return split(N, k, a);
        }
        if (word == "rule=hash") {
            uint64_t seed = 0;
            uint32_t num = 0, den = 0;
            while (rs >> word) {
                if (word.rfind("seed=", 0) == 0) seed = std::stoull(word.substr(5));
                else if (word.rfind("p=", 0) == 0) {
                    std::string frac = word.substr(2);
                    auto slash = frac.find('/');
                    if (slash == std::string::npos) throw InvalidParameters("bad hash p");
                    num = (uint32_t)std::stoul(frac.substr(0, slash));
                    den = (uint32_t)std::stoul(frac.substr(slash + 1));
                }
            }
            return hash_rule(N, k, seed, num, den);
        }
        throw InvalidParameters("unknown rule kind");
    }
    throw InvalidParameters("unknown .lrc mode");
}

KUniformColoring random_coloring(int N, int k, uint64_t seed, double p_red) {
    if (N < k || k < 1) throw InvalidParameters("random coloring needs N >= k >= 1");
    if (p_red < 0.0 || p_red > 1.0) throw InvalidParameters("p_red out of [0,1]");
    uint32_t num = (uint32_t)(p_red * 1000000.0 + 0.5);
    auto rule = KUniformColoring::hash_rule(N, k, seed, num, 1000000);
    return KUniformColoring::bitmap(N, k, rule.materialize_bits());
}

}  // namespace ramsey
