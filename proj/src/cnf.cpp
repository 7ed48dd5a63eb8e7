#include "ramsey/cnf.hpp"

#include <algorithm>
#include <sstream>

#include "ramsey/detect.hpp"

namespace ramsey {

int conjectured_ramsey(int k, int n, int m, RamseyShape shape) {
    if (k < 3) throw InvalidParameters("conjectured_ramsey needs k >= 3");
    if (shape == RamseyShape::CC) {
        if (n < m || m < 2) throw InvalidParameters("CC needs n >= m >= 2");
        return (k - 1) * n + (m - 1) / 2;
    }
    if (n < m || m < 1) throw InvalidParameters("PP/PC needs n >= m >= 1");
    return (k - 1) * n + (m + 1) / 2;
}

CnfInstance export_cnf(int k, int n, int m, int N, uint64_t copy_budget) {
    CnfInstance inst;
    inst.k = k;
    inst.n = n;
    inst.m = m;
    inst.N = N;
    inst.var_count = binom(N, k);
    auto reds = cycle_copy_rank_sets(N, k, n);
    auto blues = cycle_copy_rank_sets(N, k, m);
    if (reds.size() + blues.size() > copy_budget)
        throw BudgetExceeded("copy enumeration exceeds the budget");
    inst.red_copies = reds.size();
    inst.blue_copies = blues.size();
    std::vector<std::vector<int64_t>> clauses;
    for (const auto& rs : reds) {
        std::vector<int64_t> cl;
        for (uint64_t r : rs) cl.push_back(-(int64_t)(r + 1));
        std::sort(cl.begin(), cl.end(), [](int64_t a, int64_t b) {
            return std::abs(a) < std::abs(b);
        });
        clauses.push_back(std::move(cl));
    }
    for (const auto& rs : blues) {
        std::vector<int64_t> cl;
        for (uint64_t r : rs) cl.push_back((int64_t)(r + 1));
        std::sort(cl.begin(), cl.end(), [](int64_t a, int64_t b) {
            return std::abs(a) < std::abs(b);
        });
        clauses.push_back(std::move(cl));
    }
    std::sort(clauses.begin(), clauses.end());
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    inst.clauses = std::move(clauses);
    return inst;
}

std::string CnfInstance::to_dimacs() const {
    std::ostringstream out;
    out << "c loose-ramsey cnf k=" << k << " n=" << n << " m=" << m << " N=" << N << "\n";
    out << "c red C_" << n << " copies=" << red_copies << " blue C_" << m
        << " copies=" << blue_copies << "\n";
    out << "p cnf " << var_count << " " << clauses.size() << "\n";
    for (const auto& cl : clauses) {
        for (int64_t lit : cl) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

bool satisfies(const CnfInstance& inst, const KUniformColoring& c) {
    for (const auto& cl : inst.clauses) {
        bool sat = false;
        for (int64_t lit : cl) {
            uint64_t r = (uint64_t)std::abs(lit) - 1;
            Edge e = colex_unrank(r, inst.N, inst.k);
            bool is_red = c.color(e) == Color::Red;
            if ((lit > 0) == is_red) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

KUniformColoring decode_model(const CnfInstance& inst, const std::string& model_text) {
    std::istringstream in(model_text);
    std::string tok;
    std::vector<int> assign(inst.var_count + 1, 0);
    while (in >> tok) {
        if (tok == "v" || tok == "V" || tok == "SAT" || tok == "s" || tok == "SATISFIABLE")
            continue;
        int64_t lit;
        try {
            lit = std::stoll(tok);
        } catch (...) {
            continue;
        }
        if (lit == 0) continue;
        uint64_t var = (uint64_t)std::abs(lit);
        if (var == 0 || var > inst.var_count) throw InvalidModel("literal out of range");
        assign[var] = lit > 0 ? 1 : -1;
    }
    for (uint64_t v = 1; v <= inst.var_count; ++v)
        if (assign[v] == 0) throw InvalidModel("variable " + std::to_string(v) + " unassigned");
    std::vector<uint8_t> bits((inst.var_count + 7) / 8, 0);
    for (uint64_t v = 1; v <= inst.var_count; ++v)
        if (assign[v] > 0) bits[(v - 1) >> 3] |= (uint8_t)(1u << ((v - 1) & 7));
    KUniformColoring c = KUniformColoring::bitmap(inst.N, inst.k, std::move(bits));
    if (!satisfies(inst, c)) throw InvalidModel("model violates a clause");
    return c;
}

}  // namespace ramsey
