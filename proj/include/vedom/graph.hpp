#ifndef VEDOM_GRAPH_HPP
#define VEDOM_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "vedom/error.hpp"

namespace vedom {

// Simple undirected graph over dense vertex ids 0..n-1.
// Edges are stored as (u,v) with u < v, sorted and duplicate-free;
// adjacency mirrors the edge set and keeps neighbor lists sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_vertex(int v) const { return v >= 0 && v < n; }
    bool has_edge(int u, int v) const;
};

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves); // center is vertex 0

// Result of parsing external graph input. Sparse vertex ids are compacted
// to 0..n-1; original_ids[i] records the input id of compact vertex i.
struct ParsedGraph {
    Graph graph;
    std::vector<int> original_ids;
    bool compacted = false;
};

// Line-oriented edge list: optional header "p <n> <m>", comments starting
// with '#', and edge lines "<u> <v>". Errors carry 1-based line numbers.
ParsedGraph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

ParsedGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// Unweighted shortest-path distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

} // namespace vedom

#endif
