// loose-ramsey: canonical loose structures, monochromatic-cycle checks,
// exhaustive / randomized small-case Ramsey verification, extremal split
// colorings with certificates, the lemma engine trial driver and DIMACS
// export. All subcommands emit JSON to stdout unless --out redirects the
// artifact itself.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/cnf.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/trials.hpp"

using nlohmann::json;
using namespace ramsey;

namespace {

json edge_json(const Edge& e) { return json(e); }

json cycle_json(const LooseCycle& c) {
    json edges = json::array();
    for (const Edge& e : c.edges) edges.push_back(edge_json(e));
    return json{{"kind", "cycle"}, {"edges", edges}, {"vertex_order", c.vertex_order}};
}

json path_json(const LoosePath& p) {
    json edges = json::array();
    for (const Edge& e : p.edges) edges.push_back(edge_json(e));
    return json{{"kind", "path"}, {"edges", edges}, {"vertex_order", p.vertex_order}};
}

json coloring_json(const KUniformColoring& c) {
    json j{{"k", c.k()}, {"N", c.N()}};
    switch (c.mode()) {
        case KUniformColoring::Mode::Bitmap: j["mode"] = "bitmap"; break;
        case KUniformColoring::Mode::Split:
            j["mode"] = "split";
            j["A"] = c.split_a();
            break;
        case KUniformColoring::Mode::Hash: j["mode"] = "hash"; break;
        case KUniformColoring::Mode::Overlay: j["mode"] = "overlay"; break;
    }
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructive Ramsey machinery for k-uniform loose cycles"};
    app.require_subcommand(1);

    // cycle
    auto* sc_cycle = app.add_subcommand("cycle", "print a canonical loose cycle/path");
    int c_k = 3, c_n = 2;
    bool c_path = false;
    sc_cycle->add_option("--k", c_k, "uniformity")->required();
    sc_cycle->add_option("--n", c_n, "length")->required();
    sc_cycle->add_flag("--path", c_path, "emit the canonical loose path instead");

    // check
    auto* sc_check = app.add_subcommand("check", "arrows check on a .lrc coloring");
    std::string ck_input;
    int ck_n = 2, ck_m = 2;
    sc_check->add_option("--input", ck_input)->required();
    sc_check->add_option("--red-cycle", ck_n)->required();
    sc_check->add_option("--blue-cycle", ck_m)->required();

    // exhaustive
    auto* sc_ex = app.add_subcommand("exhaustive", "exhaust all colorings of K^k_N");
    int ex_k = 3, ex_n = 2, ex_m = 2, ex_N = 4, ex_budget = 24;
    sc_ex->add_option("--k", ex_k)->required();
    sc_ex->add_option("--n", ex_n)->required();
    sc_ex->add_option("--m", ex_m)->required();
    sc_ex->add_option("--N", ex_N)->required();
    sc_ex->add_option("--budget", ex_budget, "max bits (edges) to exhaust");

    // randomized
    auto* sc_rand = app.add_subcommand("randomized", "seeded random colorings of K^k_N");
    int r_k = 3, r_n = 3, r_m = 3, r_N = 7, r_trials = 100;
    uint64_t r_seed = 1;
    double r_p = 0.5;
    sc_rand->add_option("--k", r_k)->required();
    sc_rand->add_option("--n", r_n)->required();
    sc_rand->add_option("--m", r_m)->required();
    sc_rand->add_option("--N", r_N)->required();
    sc_rand->add_option("--trials", r_trials)->required();
    sc_rand->add_option("--seed", r_seed)->required();
    sc_rand->add_option("--p-red", r_p);

    // extremal
    auto* sc_ext = app.add_subcommand("extremal", "split lower-bound coloring + certificate");
    int e_k = 3, e_n = 3, e_m = 3;
    bool e_paths = false;
    std::string e_out;
    sc_ext->add_option("--k", e_k)->required();
    sc_ext->add_option("--n", e_n)->required();
    sc_ext->add_option("--m", e_m)->required();
    sc_ext->add_flag("--paths", e_paths, "path targets instead of cycles");
    sc_ext->add_option("--out", e_out, ".lrc output file");

    // lemma
    auto* sc_lem = app.add_subcommand("lemma", "seeded trial driver for an engine lemma");
    std::string l_name;
    int l_k = 8, l_n = 0, l_l1 = 2, l_l2 = 2, l_trials = 10;
    uint64_t l_seed = 1;
    double l_p = 0.5;
    sc_lem->add_option("--name", l_name)->required();
    sc_lem->add_option("--k", l_k)->required();
    sc_lem->add_option("--n", l_n);
    sc_lem->add_option("--l1", l_l1);
    sc_lem->add_option("--l2", l_l2);
    sc_lem->add_option("--trials", l_trials)->required();
    sc_lem->add_option("--seed", l_seed)->required();
    sc_lem->add_option("--p-red", l_p);

    // cnf
    auto* sc_cnf = app.add_subcommand("cnf", "emit the DIMACS instance");
    int q_k = 3, q_n = 2, q_m = 2, q_N = 4;
    std::string q_out;
    sc_cnf->add_option("--k", q_k)->required();
    sc_cnf->add_option("--n", q_n)->required();
    sc_cnf->add_option("--m", q_m)->required();
    sc_cnf->add_option("--N", q_N)->required();
    sc_cnf->add_option("--out", q_out)->required();

    // decode
    auto* sc_dec = app.add_subcommand("decode", "decode a solver model into a .lrc coloring");
    std::string d_cnf, d_model, d_emit;
    int d_k = 0, d_n = 0, d_m = 0, d_N = 0;
    sc_dec->add_option("--cnf", d_cnf, "DIMACS file written by the cnf subcommand")->required();
    sc_dec->add_option("--model", d_model)->required();
    sc_dec->add_option("--emit", d_emit)->required();
    sc_dec->add_option("--k", d_k);
    sc_dec->add_option("--n", d_n);
    sc_dec->add_option("--m", d_m);
    sc_dec->add_option("--N", d_N);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_cycle->parsed()) {
            json j;
            if (c_path) j = path_json(canonical_loose_path(c_n, c_k));
            else j = cycle_json(canonical_loose_cycle(c_n, c_k));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (sc_check->parsed()) {
            KUniformColoring c = KUniformColoring::from_lrc(read_file(ck_input));
            ArrowVerdict v = arrows(c, ck_n, ck_m);
            json j{{"k", c.k()}, {"n", ck_n}, {"m", ck_m}, {"N", c.N()},
                   {"mode", "check"},  {"verdict", v.holds ? "arrows" : "no-arrow"}};
            if (v.witness)
                j["witness"] = {{"color", v.witness->first == Color::Red ? "R" : "B"},
                                {"cycle", cycle_json(v.witness->second)}};
            std::cout << j.dump(2) << "\n";
            return v.holds ? 0 : 1;
        }
        if (sc_ex->parsed()) {
            ExhaustiveResult r = ramsey_exhaustive(ex_k, ex_n, ex_m, ex_N, ex_budget);
            json j{{"k", ex_k}, {"n", ex_n}, {"m", ex_m}, {"N", ex_N},
                   {"mode", "exhaustive"},
                   {"verdict", r.all_arrow ? "AllArrow" : "Counterexample"},
                   {"colorings_checked", r.colorings_checked}};
            if (ex_k == 2 * ex_n - 2 && ex_n == ex_m) {
                // nothing: placeholder for shape-specific notes
            }
            if (ex_n == 2 && ex_m == 2) {
                j["formula_note"] =
                    "the diagonal formula (k-1)n + floor((n-1)/2) gives 2k-2 at "
                    "n=2, while the statement R+1 = 2k-2 would give 2k-3; the "
                    "measured verdict decides between the two readings";
            }
            if (r.counterexample) j["counterexample_lrc"] = r.counterexample->to_lrc();
            std::cout << j.dump(2) << "\n";
            return r.all_arrow ? 0 : 1;
        }
        if (sc_rand->parsed()) {
            EvidenceReport rep = ramsey_randomized(r_k, r_n, r_m, r_N, r_trials, r_seed, r_p);
            json fails = json::array();
            for (size_t i = 0; i < rep.failures.size() && i < 16; ++i)
                fails.push_back({{"seed", rep.failure_seeds[i]},
                                 {"lrc", rep.failures[i].to_lrc()}});
            json j{{"k", r_k}, {"n", r_n},     {"m", r_m},
                   {"N", r_N}, {"mode", "randomized"}, {"seed", r_seed},
                   {"trials", rep.trials_run}, {"p_red", r_p},
                   {"failures", fails},        {"failure_count", rep.failures.size()}};
            std::cout << j.dump(2) << "\n";
            return rep.failures.empty() ? 0 : 1;
        }
        if (sc_ext->parsed()) {
            auto [col, cert] = e_paths ? split_coloring_paths(e_k, e_n, e_m)
                                       : split_coloring_cycles(e_k, e_n, e_m);
            CertificateCheck chk = check_certificate(col, cert);
            json j{{"k", e_k},
                   {"n", e_n},
                   {"m", e_m},
                   {"N", cert.N},
                   {"mode", "extremal"},
                   {"kind", cert.kind == StructureKind::Cycle ? "cycle" : "path"},
                   {"certificate",
                    {{"A", cert.a}, {"B", cert.b}, {"n", cert.n}, {"m", cert.m}}},
                   {"certificate_valid", chk.valid},
                   {"violation", chk.violation},
                   {"coloring", coloring_json(col)}};
            if (!e_out.empty()) write_file(e_out, col.to_lrc());
            std::cout << j.dump(2) << "\n";
            return chk.valid ? 0 : 1;
        }
        if (sc_lem->parsed()) {
            LemmaTrialReport rep =
                run_lemma_trials(l_name, l_k, l_n, l_l1, l_l2, l_trials, l_seed, l_p);
            json probes = json::array();
            for (const auto& pr : rep.last_trace.probes)
                probes.push_back({{"edge", pr.edge},
                                  {"color", pr.color == Color::Red ? "R" : "B"}});
            json structure = json::array();
            for (const Edge& e : rep.last_structure) structure.push_back(e);
            json j{{"op", l_name},
                   {"probes", probes},
                   {"outcome", {{"variant", rep.last_variant}, {"structure", structure}}},
                   {"params",
                    {{"k", l_k}, {"n", l_n}, {"l1", l_l1}, {"l2", l_l2}, {"seed", l_seed},
                     {"p_red", l_p}}},
                   {"trials", rep.trials},
                   {"red_outcomes", rep.red_outcomes},
                   {"blue_outcomes", rep.blue_outcomes},
                   {"construction_errors", rep.construction_errors},
                   {"errors", rep.errors}};
            std::cout << j.dump(2) << "\n";
            if (rep.construction_errors > 0) return 3;
            return rep.ok() ? 0 : 1;
        }
        if (sc_cnf->parsed()) {
            CnfInstance inst = export_cnf(q_k, q_n, q_m, q_N);
            write_file(q_out, inst.to_dimacs());
            json j{{"k", q_k},
                   {"n", q_n},
                   {"m", q_m},
                   {"N", q_N},
                   {"mode", "cnf"},
                   {"vars", inst.var_count},
                   {"clauses", inst.clauses.size()},
                   {"red_copies", inst.red_copies},
                   {"blue_copies", inst.blue_copies},
                   {"out", q_out}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (sc_dec->parsed()) {
            // recover the instance parameters from the DIMACS comment line
            std::string text = read_file(d_cnf);
            int k = d_k, n = d_n, m = d_m, N = d_N;
            {
                std::istringstream in(text);
                std::string line;
                while (std::getline(in, line)) {
                    if (line.rfind("c loose-ramsey cnf", 0) == 0) {
                        std::istringstream ls(line);
                        std::string w;
                        while (ls >> w) {
                            if (w.rfind("k=", 0) == 0) k = std::stoi(w.substr(2));
                            else if (w.rfind("n=", 0) == 0) n = std::stoi(w.substr(2));
                            else if (w.rfind("m=", 0) == 0) m = std::stoi(w.substr(2));
                            else if (w.rfind("N=", 0) == 0) N = std::stoi(w.substr(2));
                        }
                    }
                }
            }
            if (k == 0 || N == 0) throw InvalidParameters("cnf file lacks parameters; pass --k/--n/--m/--N");
            CnfInstance inst = export_cnf(k, n, m, N);
            KUniformColoring col = decode_model(inst, read_file(d_model));
            write_file(d_emit, col.to_lrc());
            ArrowVerdict v = arrows(col, n, m);
            json j{{"k", k},        {"n", n}, {"m", m}, {"N", N}, {"mode", "decode"},
                   {"emitted", d_emit},
                   {"arrows", v.holds}};
            std::cout << j.dump(2) << "\n";
            return v.holds ? 1 : 0;
        }
    } catch (const ConstructionError& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
