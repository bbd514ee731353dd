// vedom: exact solvers, generators and audits for vertex-edge domination.
//
// Exit codes: 0 success, 1 semantic negative (rejection, failed crosscheck,
// empty counterexample search), 2 input or validation errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "vedom/block_solver.hpp"
#include "vedom/graph.hpp"
#include "vedom/lewis_audit.hpp"
#include "vedom/oracles.hpp"
#include "vedom/reduction_3dm.hpp"
#include "vedom/tree_family.hpp"
#include "vedom/trees.hpp"

using namespace vedom;
using nlohmann::json;

namespace {

struct Caps {
    int oracle_cap = 20;
    int enum_cap = 10;
    int retry_budget = 400;
};

Caps caps_from_env() {
    Caps c;
    if (const char* v = std::getenv("VEDOM_ORACLE_CAP")) c.oracle_cap = std::atoi(v);
    if (const char* v = std::getenv("VEDOM_ENUM_CAP")) c.enum_cap = std::atoi(v);
    if (const char* v = std::getenv("VEDOM_RETRY_BUDGET")) c.retry_budget = std::atoi(v);
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::validation, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(errc::validation, "cannot write file: " + path);
    out << text;
}

// Graph inputs are either edge-list text or a {"n":..,"edges":[..]} object.
ParsedGraph load_graph(const std::string& path) {
    std::string text = slurp(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_edge_list(text);
}

std::string set_to_text(const SolveResult& r) {
    std::ostringstream out;
    out << variant_name(r.variant) << " objective=" << r.objective << " set={";
    for (size_t i = 0; i < r.set.size(); ++i) out << (i ? "," : "") << r.set[i];
    out << "}";
    return out.str();
}

void emit_result(const SolveResult& r, const std::string& format) {
    if (format == "json")
        std::cout << r.to_json() << "\n";
    else
        std::cout << set_to_text(r) << "\n";
}

int run(int argc, char** argv) {
    Caps caps = caps_from_env();
    CLI::App app{"exact toolkit for vertex-edge domination"};
    app.require_subcommand(1);
    std::string format = "text";

    // ---- solve-block / solve-block-independent
    std::string in_path, out_path, cert_path, sidecar_path, trace_path;
    auto* solveb = app.add_subcommand("solve-block", "minimum ve-dominating set of a block graph");
    solveb->add_option("--in", in_path, "graph file (edge list or json)")->required();
    solveb->add_option("--trace", trace_path, "write the reduction trace as json");

    auto* solvebi = app.add_subcommand("solve-block-independent",
                                       "minimum independent ve-dominating set of a block graph");
    solvebi->add_option("--in", in_path, "graph file")->required();

    // ---- oracle
    auto* oracle = app.add_subcommand("oracle", "exact brute-force solvers");
    oracle->require_subcommand(1);
    auto* o_gamma = oracle->add_subcommand("gamma-ve", "minimum ve-dominating set");
    auto* o_ive = oracle->add_subcommand("i-ve", "minimum independent ve-dominating set");
    auto* o_opve = oracle->add_subcommand("opve", "minimum optional ve-dominating set");
    auto* o_d3 = oracle->add_subcommand("d3dom", "minimum weighted distance-3 dominating set");
    for (auto* sc : {o_gamma, o_ive, o_opve, o_d3}) {
        sc->add_option("--in", in_path, "input file")->required();
        sc->add_option("--cap", caps.oracle_cap, "brute-force vertex cap");
    }

    // ---- reduce-3dm
    auto* red = app.add_subcommand("reduce-3dm", "3-dimensional-matching gadget");
    red->require_subcommand(1);
    auto* r_build = red->add_subcommand("build", "build the gadget graph and sidecar");
    r_build->add_option("--in", in_path, "3dm instance json")->required();
    r_build->add_option("--out", out_path, "write the gadget edge list");
    r_build->add_option("--sidecar", sidecar_path, "write vertex names and clique tree json");
    auto* r_verify = red->add_subcommand("verify", "check the clique-tree path property and counts");
    r_verify->add_option("--in", in_path, "3dm instance json")->required();
    r_verify->add_option("--sidecar-in", sidecar_path, "verify an external sidecar instead");
    auto* r_cross = red->add_subcommand("crosscheck", "oracle check of the size-(2p+q) equivalence");
    r_cross->add_option("--in", in_path, "3dm instance json")->required();
    r_cross->add_option("--cap", caps.oracle_cap, "brute-force vertex cap");

    // ---- family
    auto* fam = app.add_subcommand("family", "trees with equal ve- and independent ve-domination");
    fam->require_subcommand(1);
    uint64_t seed = 1;
    int atoms = 2;
    FamilyGenParams gen_params;
    auto* f_gen = fam->add_subcommand("gen", "generate a family member with a certificate");
    f_gen->add_option("--seed", seed, "rng seed")->required();
    f_gen->add_option("--atoms", atoms, "number of atoms")->required();
    f_gen->add_option("--min-atom", gen_params.min_atom_size, "minimum atom size");
    f_gen->add_option("--max-atom", gen_params.max_atom_size, "maximum atom size");
    f_gen->add_option("--max-vertices", gen_params.max_vertices, "total vertex budget");
    f_gen->add_option("--retry-budget", gen_params.retry_budget_per_atom, "retries per atom");
    f_gen->add_option("--out", out_path, "write the tree edge list");
    f_gen->add_option("--cert", cert_path, "write the certificate json");
    auto* f_centers = fam->add_subcommand("centers", "atom centers of a certificate");
    f_centers->add_option("--cert", cert_path, "certificate json")->required();
    auto* f_rec = fam->add_subcommand("recognize", "decide family membership of a tree");
    f_rec->add_option("--in", in_path, "tree file")->required();
    f_rec->add_option("--cap", caps.oracle_cap, "brute-force vertex cap");
    f_rec->add_option("--cert-out", cert_path, "write the certificate json on acceptance");

    // ---- audit-lewis
    auto* audit_cmd = app.add_subcommand("audit-lewis", "subdivide-and-weight transform audit");
    audit_cmd->require_subcommand(1);
    auto* a_single = audit_cmd->add_subcommand("single", "audit one tree");
    a_single->add_option("--in", in_path, "tree file")->required();
    a_single->add_option("--cap", caps.oracle_cap, "brute-force vertex cap");
    int max_n = 12;
    auto* a_search = audit_cmd->add_subcommand("search", "exhaustive counterexample search");
    a_search->add_option("--max-n", max_n, "largest tree size to audit");

    // ---- enum-trees
    int enum_n = 6;
    bool dedup = false, count_only = false;
    auto* etrees = app.add_subcommand("enum-trees", "enumerate trees on n vertices");
    etrees->add_option("--n", enum_n, "number of vertices")->required();
    etrees->add_flag("--dedup", dedup, "one representative per isomorphism class");
    etrees->add_flag("--count-only", count_only, "print only the count");
    etrees->add_option("--cap", caps.enum_cap, "labeled enumeration cap");

    // every leaf subcommand shares the output-format switch and exit-code help
    const std::string footer =
        "Exit codes: 0 success, 1 semantic negative (non-member, failed crosscheck,\n"
        "empty counterexample search), 2 invalid input or cap exceeded.";
    app.footer(footer);
    for (auto* top : app.get_subcommands({})) {
        top->footer(footer);
        auto add_fmt = [&](CLI::App* sc) {
            sc->footer(footer);
            sc->add_option("--format", format, "output format: text or json")
                ->check(CLI::IsMember({"text", "json"}));
        };
        auto subs = top->get_subcommands({});
        if (subs.empty())
            add_fmt(top);
        else
            for (auto* sc : subs) add_fmt(sc);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    OracleOptions oo{caps.oracle_cap};

    if (solveb->parsed()) {
        Graph g = load_graph(in_path).graph;
        ReductionTrace trace;
        auto res = solve_block_graph(g, trace_path.empty() ? nullptr : &trace);
        if (!trace_path.empty()) spit(trace_path, trace.to_json());
        emit_result(res, format);
        return 0;
    }
    if (solvebi->parsed()) {
        Graph g = load_graph(in_path).graph;
        emit_result(solve_block_graph_independent(g), format);
        return 0;
    }
    if (o_gamma->parsed() || o_ive->parsed()) {
        Graph g = load_graph(in_path).graph;
        emit_result(o_gamma->parsed() ? gamma_ve_bruteforce(g, oo) : i_ve_bruteforce(g, oo), format);
        return 0;
    }
    if (o_opve->parsed()) {
        json j = json::parse(slurp(in_path));
        Graph g = parse_graph_json(j.at("graph").dump()).graph;
        std::vector<char> forced(g.n, 0);
        for (int v : j.value("forced", std::vector<int>{})) {
            if (v < 0 || v >= g.n) fail(errc::validation, "opve: forced vertex out of range");
            forced[v] = 1;
        }
        std::vector<char> required(g.edge_count(), 0);
        if (!j.contains("required")) {
            required.assign(g.edge_count(), 1);
        } else {
            for (const auto& e : j.at("required")) {
                int a = e[0].get<int>(), b = e[1].get<int>();
                bool hit = false;
                for (int idx = 0; idx < g.edge_count(); ++idx)
                    if (g.edges[idx] == std::make_pair(std::min(a, b), std::max(a, b))) {
                        required[idx] = 1;
                        hit = true;
                    }
                if (!hit) fail(errc::validation, "opve: required edge not in graph");
            }
        }
        emit_result(gamma_opve_bruteforce(g, forced, required, oo), format);
        return 0;
    }
    if (o_d3->parsed()) {
        json j = json::parse(slurp(in_path));
        WeightedInstance inst;
        inst.graph = parse_graph_json(j.at("graph").dump()).graph;
        inst.weight.assign(inst.graph.n, kForbiddenWeight);
        auto warr = j.at("weights");
        if (static_cast<int>(warr.size()) != inst.graph.n)
            fail(errc::validation, "d3dom: weights must list every vertex");
        for (int v = 0; v < inst.graph.n; ++v)
            if (!warr[v].is_null()) inst.weight[v] = warr[v].get<long long>();
        std::vector<int> targets;
        if (j.contains("targets"))
            targets = j.at("targets").get<std::vector<int>>();
        else
            for (int v = 0; v < inst.graph.n; ++v) targets.push_back(v);
        emit_result(weighted_d3dom_bruteforce(inst, targets, oo), format);
        return 0;
    }
    if (r_build->parsed()) {
        auto inst = parse_3dm(slurp(in_path));
        auto gd = build_gadget(inst);
        if (!out_path.empty()) spit(out_path, format_edge_list(gd.graph));
        if (!sidecar_path.empty()) spit(sidecar_path, gd.sidecar_json());
        json j;
        j["node_count"] = gd.clique_tree.nodes.size();
        j["vertex_count"] = gd.graph.n;
        j["edge_count"] = gd.graph.edge_count();
        if (format == "json")
            std::cout << j.dump() << "\n";
        else
            std::cout << "gadget: " << gd.clique_tree.nodes.size() << " clique-tree nodes, "
                      << gd.graph.n << " vertices, " << gd.graph.edge_count() << " edges\n";
        return 0;
    }
    if (r_verify->parsed()) {
        auto inst = parse_3dm(slurp(in_path));
        CliqueTree ct;
        if (!sidecar_path.empty()) {
            json j = json::parse(slurp(sidecar_path));
            for (const auto& node : j.at("clique_tree_nodes")) ct.nodes.push_back(node.get<std::vector<int>>());
            for (const auto& e : j.at("clique_tree_edges")) ct.tree_edges.push_back({e[0], e[1]});
        } else {
            ct = build_gadget(inst).clique_tree;
        }
        auto rep = verify_path_property(ct);
        int p = inst.p(), q = inst.q;
        bool counts_ok = static_cast<int>(ct.nodes.size()) == 8 * p + 6 * q + 1;
        Graph g = graph_from_clique_tree(ct);
        counts_ok = counts_ok && g.n == 11 * p + 6 * q;
        json j;
        j["path_property"] = rep.ok;
        j["counts_ok"] = counts_ok;
        j["offending_vertices"] = rep.offending_vertices;
        if (format == "json")
            std::cout << j.dump() << "\n";
        else
            std::cout << "path property: " << (rep.ok ? "ok" : "violated")
                      << ", counts: " << (counts_ok ? "ok" : "wrong") << "\n";
        return rep.ok && counts_ok ? 0 : 1;
    }
    if (r_cross->parsed()) {
        auto inst = parse_3dm(slurp(in_path));
        auto gd = build_gadget(inst);
        int bound = 2 * inst.p() + inst.q;
        OracleOptions wide{std::max(caps.oracle_cap, gd.graph.n)};
        auto res = gamma_ve_bruteforce_bounded(gd.graph, bound, wide);
        bool sat = solve_3dm_bruteforce(inst).has_value();
        bool at_bound = res.has_value() && res->objective == bound;
        bool below = res.has_value() && res->objective < bound;
        bool equivalence = !below && (sat == at_bound);
        json j;
        j["p"] = inst.p();
        j["q"] = inst.q;
        j["bound"] = bound;
        j["matching_exists"] = sat;
        j["gamma_ve"] = res ? json(res->objective) : json(nullptr);
        j["gamma_exceeds_bound"] = !res.has_value();
        j["equivalence_holds"] = equivalence;
        if (format == "json")
            std::cout << j.dump() << "\n";
        else
            std::cout << "matching=" << (sat ? "yes" : "no") << " gamma_ve"
                      << (res ? "=" + std::to_string(res->objective)
                              : ">" + std::to_string(bound))
                      << " equivalence=" << (equivalence ? "holds" : "VIOLATED") << "\n";
        return equivalence ? 0 : 1;
    }
    if (f_gen->parsed()) {
        gen_params.retry_budget_per_atom = std::max(gen_params.retry_budget_per_atom, caps.retry_budget);
        auto gm = generate_family_member(seed, atoms, gen_params);
        if (!out_path.empty()) spit(out_path, format_edge_list(gm.tree));
        if (!cert_path.empty()) spit(cert_path, gm.certificate.to_json());
        if (format == "json") {
            json j;
            j["n"] = gm.tree.n;
            j["atoms"] = gm.certificate.atom_count();
            j["centers"] = atom_centers(gm.certificate);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "family member: " << gm.tree.n << " vertices, "
                      << gm.certificate.atom_count() << " atoms\n";
        }
        return 0;
    }
    if (f_centers->parsed()) {
        auto cert = certificate_from_json(slurp(cert_path));
        auto built = replay_certificate(cert);
        if (format == "json") {
            json j;
            j["centers"] = built.centers;
            j["independent"] = is_independent_set(built.tree, built.centers);
            j["ve_dominating"] = is_ve_dominating(built.tree, built.centers);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "centers:";
            for (int c : built.centers) std::cout << " " << c;
            std::cout << "\n";
        }
        return 0;
    }
    if (f_rec->parsed()) {
        Graph g = load_graph(in_path).graph;
        auto res = recognize(g, oo);
        if (std::holds_alternative<FamilyCertificate>(res)) {
            const auto& cert = std::get<FamilyCertificate>(res);
            if (!cert_path.empty()) spit(cert_path, cert.to_json());
            if (format == "json") {
                json j;
                j["member"] = true;
                j["atoms"] = cert.atom_count();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "member: " << cert.atom_count() << " atoms\n";
            }
            return 0;
        }
        const auto& rej = std::get<RecognizeRejection>(res);
        if (format == "json") {
            json j;
            j["member"] = false;
            j["stage"] = rej.stage;
            j["gamma_ve"] = rej.gamma_ve;
            j["i_ve"] = rej.i_ve;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "not a member: " << rej.stage << " (gamma_ve=" << rej.gamma_ve
                      << ", i_ve=" << rej.i_ve << ")\n";
        }
        return 1;
    }
    if (a_single->parsed()) {
        Graph g = load_graph(in_path).graph;
        AuditOptions ao;
        ao.oracle = oo;
        auto rep = audit(g, ao);
        if (format == "json")
            std::cout << rep.to_json() << "\n";
        else
            std::cout << "gamma_ve=" << rep.gamma_ve << " lewis=" << rep.lewis
                      << " corrected=" << rep.corrected << (rep.mismatch ? " MISMATCH" : "") << "\n";
        return 0;
    }
    if (a_search->parsed()) {
        auto reports = search_counterexamples(max_n);
        for (const auto& r : reports) std::cout << r.to_json() << "\n";
        if (reports.empty()) {
            std::cerr << "no counterexample up to n=" << max_n << "\n";
            return 1;
        }
        std::cerr << reports.size() << " mismatching trees; smallest has " << reports.front().tree.n
                  << " vertices, edges:";
        for (auto [u, v] : reports.front().tree.edges) std::cerr << " " << u << "-" << v;
        std::cerr << "\n";
        return 0;
    }
    if (etrees->parsed()) {
        EnumOptions eo;
        eo.labeled_cap = std::max(caps.enum_cap, eo.labeled_cap);
        long long count = 0;
        if (dedup) {
            for (const Graph& t : enumerate_canonical_trees(enum_n)) {
                ++count;
                if (!count_only) std::cout << graph_to_json(t) << "\n";
            }
        } else {
            enumerate_trees(enum_n, false, [&](const Graph& t) {
                ++count;
                if (!count_only) std::cout << graph_to_json(t) << "\n";
                return true;
            }, eo);
        }
        if (count_only) std::cout << count << "\n";
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
