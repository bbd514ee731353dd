#include "vedom/blocks.hpp"

#include <algorithm>

namespace vedom {

namespace {

// Adjacency with edge ids, so popped edge stacks map back to Graph::edges.
struct IndexedAdj {
    std::vector<std::vector<std::pair<int, int>>> at; // (neighbor, edge id)
    explicit IndexedAdj(const Graph& g) : at(g.n) {
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            at[u].emplace_back(v, e);
            at[v].emplace_back(u, e);
        }
    }
};

} // namespace

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
    BlockDecomposition dec;
    dec.is_cut.assign(g.n, 0);
    dec.block_of_edge.assign(g.edge_count(), -1);
    dec.blocks_of_vertex.assign(g.n, {});

    IndexedAdj ia(g);
    std::vector<int> disc(g.n, -1), low(g.n, 0), child_count(g.n, 0);
    std::vector<size_t> next(g.n, 0);
    std::vector<int> parent_edge(g.n, -1);
    std::vector<int> edge_stack;
    int timer = 0;

    auto pop_block = [&](int top_edge) {
        std::vector<int> verts;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            dec.block_of_edge[e] = static_cast<int>(dec.blocks.size());
            verts.push_back(g.edges[e].first);
            verts.push_back(g.edges[e].second);
            if (e == top_edge) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        dec.blocks.push_back(std::move(verts));
    };

    std::vector<int> stack;
    for (int root = 0; root < g.n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.adj[root].empty()) {
            disc[root] = timer++;
            dec.blocks.push_back({root}); // isolated vertex
            continue;
        }
        stack.push_back(root);
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            if (next[v] < ia.at[v].size()) {
                auto [w, e] = ia.at[v][next[v]++];
                if (e == parent_edge[v]) continue;
                if (disc[w] < 0) {
                    edge_stack.push_back(e);
                    parent_edge[w] = e;
                    disc[w] = low[w] = timer++;
                    ++child_count[v];
                    stack.push_back(w);
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back();
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        if (parent_edge[u] != -1 || child_count[u] > 1) dec.is_cut[u] = 1;
                        pop_block(parent_edge[v]);
                    }
                }
            }
        }
    }

    for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b)
        for (int v : dec.blocks[b]) dec.blocks_of_vertex[v].push_back(b);
    for (int v = 0; v < g.n; ++v)
        if (dec.is_cut[v]) dec.cut_vertices.push_back(v);
    return dec;
}

bool is_block_graph(const Graph& g) {
    auto dec = blocks_and_cut_vertices(g);
    std::vector<long long> edges_in_block(dec.blocks.size(), 0);
    for (int e = 0; e < g.edge_count(); ++e) ++edges_in_block[dec.block_of_edge[e]];
    for (size_t b = 0; b < dec.blocks.size(); ++b) {
        long long k = static_cast<long long>(dec.blocks[b].size());
        if (edges_in_block[b] != k * (k - 1) / 2) return false;
    }
    return true;
}

} // namespace vedom
