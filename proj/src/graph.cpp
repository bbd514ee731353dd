#include "vedom/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vedom {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) fail(errc::validation, "vertex count must be non-negative");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::validation, "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) fail(errc::validation, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        fail(errc::validation, "duplicate edge");
    Graph g;
    g.n = n;
    g.edges = std::move(edge_list);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int target = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3) fail(errc::validation, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(e));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

Graph make_star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, std::move(e));
}

namespace {

ParsedGraph assemble(std::vector<std::pair<int, int>> raw_edges, int declared_n,
                     const std::set<int>& mentioned) {
    ParsedGraph out;
    if (declared_n >= 0) {
        for (int id : mentioned)
            if (id >= declared_n)
                fail(errc::parse, "vertex id " + std::to_string(id) + " exceeds declared count " +
                                      std::to_string(declared_n));
        out.graph = Graph::from_edges(declared_n, std::move(raw_edges));
        out.original_ids.resize(declared_n);
        for (int i = 0; i < declared_n; ++i) out.original_ids[i] = i;
        return out;
    }
    std::map<int, int> remap;
    for (int id : mentioned) {
        int next = static_cast<int>(remap.size());
        remap.emplace(id, next);
    }
    out.original_ids.reserve(remap.size());
    for (int id : mentioned) out.original_ids.push_back(id);
    int n = static_cast<int>(remap.size());
    out.compacted = !mentioned.empty() && (*mentioned.begin() != 0 || *mentioned.rbegin() != n - 1);
    for (auto& [u, v] : raw_edges) {
        u = remap.at(u);
        v = remap.at(v);
    }
    out.graph = Graph::from_edges(n, std::move(raw_edges));
    return out;
}

} // namespace

ParsedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    long long declared_m = -1;
    std::vector<std::pair<int, int>> raw;
    std::set<int> mentioned;
    std::set<std::pair<int, int>> seen;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string where = "line " + std::to_string(line_no) + ": ";
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank
        if (first[0] == '#') continue;
        if (first == "p") {
            if (saw_content || declared_n >= 0) fail(errc::parse, where + "misplaced header");
            long long n, m;
            if (!(ls >> n >> m) || n < 0 || m < 0) fail(errc::parse, where + "malformed header");
            declared_n = static_cast<int>(n);
            declared_m = m;
            continue;
        }
        saw_content = true;
        auto parse_id = [&](const std::string& tok) -> long long {
            try {
                size_t pos = 0;
                long long x = std::stoll(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                return x;
            } catch (const std::exception&) {
                fail(errc::parse, where + "malformed token '" + tok + "'");
            }
        };
        long long u = parse_id(first), v;
        std::string second;
        if (!(ls >> second)) fail(errc::parse, where + "expected two vertex ids");
        v = parse_id(second);
        std::string extra;
        if (ls >> extra) fail(errc::parse, where + "trailing token '" + extra + "'");
        if (u < 0 || v < 0) fail(errc::parse, where + "negative vertex id");
        if (u == v) fail(errc::parse, where + "self-loop " + std::to_string(u) + " " + std::to_string(v));
        int a = static_cast<int>(std::min(u, v)), b = static_cast<int>(std::max(u, v));
        if (!seen.emplace(a, b).second)
            fail(errc::parse, where + "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        raw.emplace_back(a, b);
        mentioned.insert(a);
        mentioned.insert(b);
    }
    if (declared_m >= 0 && declared_m != static_cast<long long>(raw.size()))
        fail(errc::parse, "header edge count " + std::to_string(declared_m) + " does not match " +
                              std::to_string(raw.size()) + " edge lines");
    return assemble(std::move(raw), declared_n, mentioned);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n << " " << g.edges.size() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

ParsedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::parse, std::string("bad graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail(errc::parse, "graph json needs fields n and edges");
    int declared_n = -1;
    try {
        declared_n = j.at("n").get<int>();
    } catch (const std::exception&) {
        fail(errc::parse, "graph json: n must be an integer");
    }
    std::vector<std::pair<int, int>> raw;
    std::set<int> mentioned;
    std::set<std::pair<int, int>> seen;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail(errc::parse, "graph json: each edge must be [u, v]");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0) fail(errc::parse, "graph json: negative vertex id");
        if (u == v) fail(errc::parse, "graph json: self-loop at " + std::to_string(u));
        int a = std::min(u, v), b = std::max(u, v);
        if (!seen.emplace(a, b).second)
            fail(errc::parse, "graph json: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        raw.emplace_back(a, b);
        mentioned.insert(a);
        mentioned.insert(b);
    }
    return assemble(std::move(raw), declared_n, mentioned);
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    if (!g.has_vertex(src)) fail(errc::validation, "bfs source not in graph");
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

bool is_tree(const Graph& g) {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

} // namespace vedom
