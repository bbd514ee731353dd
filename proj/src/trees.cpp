#include "vedom/trees.hpp"

#include <algorithm>
#include <set>

namespace vedom {

std::vector<int> tree_centers(const Graph& t) {
    if (!is_tree(t)) fail(errc::not_a_tree, "tree_centers: input is not a tree");
    int n = t.n;
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : t.adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace {

std::string ahu_encode(const Graph& t, int v, int parent) {
    std::vector<std::string> parts;
    for (int w : t.adj[v])
        if (w != parent) parts.push_back(ahu_encode(t, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (auto& p : parts) out += p;
    out += ")";
    return out;
}

} // namespace

TreeCanonicalForm canonical_form(const Graph& t) {
    auto centers = tree_centers(t);
    if (centers.size() == 1) return {"V" + ahu_encode(t, centers[0], -1)};
    int c1 = centers[0], c2 = centers[1];
    std::string a = ahu_encode(t, c1, c2), b = ahu_encode(t, c2, c1);
    if (b < a) std::swap(a, b);
    return {"E" + a + "|" + b};
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 2) fail(errc::validation, "prufer_decode needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2) fail(errc::validation, "prufer sequence must have n-2 entries");
    std::vector<int> deg(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n) fail(errc::validation, "prufer entry out of range");
        ++deg[x];
    }
    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph::from_edges(n, std::move(edges));
}

void enumerate_trees(int n, bool dedup, const std::function<bool(const Graph&)>& fn,
                     const EnumOptions& opts) {
    if (n < 1) fail(errc::validation, "enumerate_trees needs n >= 1");
    if (n > opts.labeled_cap)
        fail(errc::cap_exceeded, "enumerate_trees: n=" + std::to_string(n) + " exceeds labeled cap " +
                                     std::to_string(opts.labeled_cap));
    if (n == 1) {
        fn(Graph::from_edges(1, {}));
        return;
    }
    if (n == 2) {
        fn(Graph::from_edges(2, {{0, 1}}));
        return;
    }
    std::set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        Graph t = prufer_decode(seq, n);
        bool emit = true;
        if (dedup) emit = seen.insert(canonical_form(t).encoding).second;
        if (emit && !fn(t)) return;
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

std::vector<Graph> enumerate_canonical_trees(int n, const EnumOptions& opts) {
    if (n < 1) fail(errc::validation, "enumerate_canonical_trees needs n >= 1");
    if (n > opts.canonical_cap)
        fail(errc::cap_exceeded, "enumerate_canonical_trees: n=" + std::to_string(n) +
                                     " exceeds canonical cap " + std::to_string(opts.canonical_cap));
    std::vector<Graph> level = {Graph::from_edges(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& t : level) {
            for (int v = 0; v < t.n; ++v) {
                auto edges = t.edges;
                edges.emplace_back(v, t.n);
                Graph ext = Graph::from_edges(t.n + 1, std::move(edges));
                if (seen.insert(canonical_form(ext).encoding).second) next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }
    return level;
}

Graph random_block_graph(int n, uint64_t seed, const BlockGraphParams& params) {
    if (n < 1) fail(errc::validation, "random_block_graph needs n >= 1");
    if (params.min_block_size < 2 || params.max_block_size < params.min_block_size)
        fail(errc::validation, "random_block_graph: infeasible block size bounds");
    if (n == 1) return Graph::from_edges(1, {});

    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    auto add_clique = [&](const std::vector<int>& verts) {
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) edges.emplace_back(verts[i], verts[j]);
    };

    int built = 0;
    auto sample_block = [&](int attach_count) {
        // attach_count vertices already exist; the rest are fresh
        int want = rng.in(params.min_block_size, params.max_block_size);
        int fresh = std::min(want - attach_count, n - built);
        return fresh;
    };

    {
        int fresh = std::max(2, std::min(rng.in(params.min_block_size, params.max_block_size), n));
        std::vector<int> verts;
        for (int i = 0; i < fresh; ++i) verts.push_back(built++);
        add_clique(verts);
    }
    while (built < n) {
        int at = rng.below(built);
        int fresh = std::max(1, sample_block(1));
        std::vector<int> verts = {at};
        for (int i = 0; i < fresh && built < n; ++i) verts.push_back(built++);
        add_clique(verts);
    }
    return Graph::from_edges(n, std::move(edges));
}

} // namespace vedom
