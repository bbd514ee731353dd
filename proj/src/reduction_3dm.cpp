#include "vedom/reduction_3dm.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

#include "vedom/oracles.hpp"

namespace vedom {

ThreeDMInstance parse_3dm(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        fail(errc::parse, std::string("bad 3dm json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("q") || !j.contains("triples"))
        fail(errc::parse, "3dm json needs fields q and triples");
    ThreeDMInstance inst;
    if (!j["q"].is_number_integer() || (inst.q = j["q"].get<int>()) < 1)
        fail(errc::parse, "3dm json: q must be a positive integer");
    std::set<std::array<int, 3>> seen;
    for (const auto& t : j["triples"]) {
        if (!t.is_array() || t.size() != 3) fail(errc::parse, "3dm json: each triple must be [r, s, t]");
        std::array<int, 3> triple;
        for (int i = 0; i < 3; ++i) {
            if (!t[i].is_number_integer()) fail(errc::parse, "3dm json: triple entries must be integers");
            triple[i] = t[i].get<int>();
            if (triple[i] < 1 || triple[i] > inst.q)
                fail(errc::parse, "3dm json: index " + std::to_string(triple[i]) + " out of range 1.." +
                                      std::to_string(inst.q));
        }
        if (!seen.insert(triple).second) fail(errc::parse, "3dm json: duplicate triple");
        inst.triples.push_back(triple);
    }
    if (inst.triples.empty()) fail(errc::parse, "3dm json: empty triple list");
    return inst;
}

std::string threedm_to_json(const ThreeDMInstance& inst) {
    nlohmann::json j;
    j["q"] = inst.q;
    auto arr = nlohmann::json::array();
    for (const auto& t : inst.triples) arr.push_back({t[0], t[1], t[2]});
    j["triples"] = std::move(arr);
    return j.dump();
}

namespace {

// Gadget vertex ids: per triple i the letters A..K at 11*i + letter, then
// R,S,T,X,Y,Z per element after the triple section.
struct Ids {
    int p, q;
    explicit Ids(const ThreeDMInstance& inst) : p(inst.p()), q(inst.q) {}
    int letter(int i, char ch) const { return 11 * i + (ch - 'A'); }
    int element(char ch, int j) const { // j is 0-based
        static const std::string order = "RSTXYZ";
        return 11 * p + static_cast<int>(order.find(ch)) * q + j;
    }
    int count() const { return 11 * p + 6 * q; }
};

} // namespace

Gadget build_gadget(const ThreeDMInstance& inst) {
    Gadget gd;
    gd.instance = inst;
    Ids ids(inst);
    int p = inst.p(), q = inst.q;

    gd.vertex_names.assign(ids.count(), "");
    for (int i = 0; i < p; ++i)
        for (char ch = 'A'; ch <= 'K'; ++ch)
            gd.vertex_names[ids.letter(i, ch)] = std::string(1, ch) + std::to_string(i + 1);
    for (char ch : std::string("RSTXYZ"))
        for (int j = 0; j < q; ++j) gd.vertex_names[ids.element(ch, j)] = std::string(1, ch) + std::to_string(j + 1);

    auto& nodes = gd.clique_tree.nodes;
    auto& tedges = gd.clique_tree.tree_edges;

    // central node first, then for every triple its eight-node subtree
    std::vector<int> central;
    for (int i = 0; i < p; ++i)
        for (char ch : {'A', 'B', 'C'}) central.push_back(ids.letter(i, ch));
    nodes.push_back(central);
    const int central_node = 0;

    for (int i = 0; i < p; ++i) {
        auto L = [&](char ch) { return ids.letter(i, ch); };
        int n1 = static_cast<int>(nodes.size());
        nodes.push_back({L('A'), L('B'), L('C'), L('D')});
        int n2 = static_cast<int>(nodes.size());
        nodes.push_back({L('A'), L('B'), L('D'), L('F')});
        int n3 = static_cast<int>(nodes.size());
        nodes.push_back({L('C'), L('D'), L('G')});
        int n4 = static_cast<int>(nodes.size());
        nodes.push_back({L('A'), L('B'), L('E')});
        int n5 = static_cast<int>(nodes.size());
        nodes.push_back({L('C'), L('G'), L('K')});
        int n6 = static_cast<int>(nodes.size());
        nodes.push_back({L('A'), L('E'), L('H')});
        int n7 = static_cast<int>(nodes.size());
        nodes.push_back({L('B'), L('E'), L('I')});
        int n8 = static_cast<int>(nodes.size());
        nodes.push_back({L('B'), L('I'), L('J')});
        tedges.push_back({central_node, n1});
        tedges.push_back({n1, n2});
        tedges.push_back({n1, n3});
        tedges.push_back({n2, n4});
        tedges.push_back({n3, n5});
        tedges.push_back({n4, n6});
        tedges.push_back({n4, n7});
        tedges.push_back({n7, n8});
    }

    // element subtrees: hub node attached to the central node, with a pendant
    auto add_element = [&](char hub, char pend, char letter, int coord) {
        for (int j = 0; j < q; ++j) {
            std::vector<int> hub_set = {ids.element(hub, j)};
            for (int i = 0; i < p; ++i)
                if (inst.triples[i][coord] == j + 1) hub_set.push_back(ids.letter(i, letter));
            int hn = static_cast<int>(nodes.size());
            nodes.push_back(hub_set);
            int pn = static_cast<int>(nodes.size());
            nodes.push_back({ids.element(hub, j), ids.element(pend, j)});
            tedges.push_back({central_node, hn});
            tedges.push_back({hn, pn});
        }
    };
    add_element('R', 'X', 'A', 0);
    add_element('S', 'Y', 'B', 1);
    add_element('T', 'Z', 'C', 2);

    gd.graph = graph_from_clique_tree(gd.clique_tree);
    return gd;
}

CliqueTree build_clique_tree(const ThreeDMInstance& inst) { return build_gadget(inst).clique_tree; }

Graph graph_from_clique_tree(const CliqueTree& ct) {
    int n = 0;
    for (const auto& node : ct.nodes)
        for (int v : node) n = std::max(n, v + 1);
    std::set<std::pair<int, int>> edges;
    for (const auto& node : ct.nodes)
        for (size_t i = 0; i < node.size(); ++i)
            for (size_t j = i + 1; j < node.size(); ++j)
                edges.insert({std::min(node[i], node[j]), std::max(node[i], node[j])});
    return Graph::from_edges(n, {edges.begin(), edges.end()});
}

PathPropertyReport verify_path_property(const CliqueTree& ct) {
    PathPropertyReport rep;
    int nn = static_cast<int>(ct.nodes.size());
    std::vector<std::vector<int>> tadj(nn);
    for (auto [a, b] : ct.tree_edges) {
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    int n = 0;
    for (const auto& node : ct.nodes)
        for (int v : node) n = std::max(n, v + 1);
    for (int v = 0; v < n; ++v) {
        std::vector<char> has(nn, 0);
        int count = 0, start = -1;
        for (int i = 0; i < nn; ++i)
            for (int u : ct.nodes[i])
                if (u == v) {
                    has[i] = 1;
                    ++count;
                    start = i;
                }
        if (count <= 1) continue;
        // the nodes containing v must induce a connected path: every induced
        // degree <= 2, exactly two endpoints, and all reachable within
        std::vector<int> stack = {start};
        std::vector<char> seen(nn, 0);
        seen[start] = 1;
        int reached = 1, deg_over = 0, endpoints = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            int d = 0;
            for (int y : tadj[x])
                if (has[y]) {
                    ++d;
                    if (!seen[y]) {
                        seen[y] = 1;
                        ++reached;
                        stack.push_back(y);
                    }
                }
            if (d > 2) ++deg_over;
            if (d <= 1) ++endpoints;
        }
        bool path = reached == count && deg_over == 0 && (count == 1 || endpoints == 2);
        if (!path) {
            rep.ok = false;
            rep.offending_vertices.push_back(v);
        }
    }
    return rep;
}

std::string Gadget::sidecar_json() const {
    nlohmann::json j;
    j["instance"] = nlohmann::json::parse(threedm_to_json(instance));
    j["vertex_count"] = graph.n;
    j["node_count"] = clique_tree.nodes.size();
    j["vertex_names"] = vertex_names;
    auto nodes = nlohmann::json::array();
    for (const auto& node : clique_tree.nodes) nodes.push_back(node);
    j["clique_tree_nodes"] = std::move(nodes);
    auto te = nlohmann::json::array();
    for (auto [a, b] : clique_tree.tree_edges) te.push_back({a, b});
    j["clique_tree_edges"] = std::move(te);
    return j.dump(2);
}

bool is_valid_matching(const ThreeDMInstance& inst, const std::vector<int>& matching) {
    if (static_cast<int>(matching.size()) != inst.q) return false;
    for (int coord = 0; coord < 3; ++coord) {
        std::set<int> used;
        for (int i : matching) {
            if (i < 0 || i >= inst.p()) return false;
            if (!used.insert(inst.triples[i][coord]).second) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> solve_3dm_bruteforce(const ThreeDMInstance& inst) {
    int p = inst.p();
    if (p > 24) fail(errc::cap_exceeded, "solve_3dm_bruteforce: too many triples");
    std::vector<int> chosen;
    std::vector<char> used_u(inst.q + 1, 0), used_v(inst.q + 1, 0), used_w(inst.q + 1, 0);
    std::function<bool(int)> rec = [&](int from) {
        if (static_cast<int>(chosen.size()) == inst.q) return true;
        for (int i = from; i < p; ++i) {
            auto [r, s, t] = inst.triples[i];
            if (used_u[r] || used_v[s] || used_w[t]) continue;
            used_u[r] = used_v[s] = used_w[t] = 1;
            chosen.push_back(i);
            if (rec(i + 1)) return true;
            chosen.pop_back();
            used_u[r] = used_v[s] = used_w[t] = 0;
        }
        return false;
    };
    if (rec(0)) return chosen;
    return std::nullopt;
}

std::vector<int> matching_to_ve_set(const Gadget& gd, const std::vector<int>& matching) {
    if (!is_valid_matching(gd.instance, matching))
        fail(errc::validation, "matching_to_ve_set: not a valid matching");
    Ids ids(gd.instance);
    std::set<int> matched(matching.begin(), matching.end());
    std::vector<int> out;
    for (int i = 0; i < gd.instance.p(); ++i) {
        if (matched.count(i)) {
            out.push_back(ids.letter(i, 'A'));
            out.push_back(ids.letter(i, 'B'));
            out.push_back(ids.letter(i, 'C'));
        } else {
            out.push_back(ids.letter(i, 'D'));
            out.push_back(ids.letter(i, 'E'));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ve_set_to_matching(const Gadget& gd, const std::vector<int>& dom_set) {
    const ThreeDMInstance& inst = gd.instance;
    int p = inst.p(), q = inst.q;
    if (static_cast<int>(dom_set.size()) != 2 * p + q)
        fail(errc::validation, "ve_set_to_matching: set size must be 2p+q");
    if (!is_ve_dominating(gd.graph, dom_set))
        fail(errc::validation, "ve_set_to_matching: set is not ve-dominating");

    // count per-triple usage; triples covered with three or more vertices are
    // the hub-style candidates the counting argument singles out
    std::vector<int> per_triple(p, 0);
    for (int v : dom_set)
        if (v < 11 * p) ++per_triple[v / 11];
    std::vector<int> candidates;
    for (int i = 0; i < p; ++i)
        if (per_triple[i] >= 3) candidates.push_back(i);

    // choose q pairwise disjoint triples among the candidates
    std::vector<char> used_u(q + 1, 0), used_v(q + 1, 0), used_w(q + 1, 0);
    std::vector<int> chosen;
    std::function<bool(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(chosen.size()) == q) return true;
        for (size_t idx = from; idx < candidates.size(); ++idx) {
            int i = candidates[idx];
            auto [r, s, t] = inst.triples[i];
            if (used_u[r] || used_v[s] || used_w[t]) continue;
            used_u[r] = used_v[s] = used_w[t] = 1;
            chosen.push_back(i);
            if (rec(idx + 1)) return true;
            chosen.pop_back();
            used_u[r] = used_v[s] = used_w[t] = 0;
        }
        return false;
    };
    if (!rec(0))
        fail(errc::infeasible,
             "ve_set_to_matching: no matching recoverable from the hub-style triples of this set");
    return chosen;
}

} // namespace vedom
