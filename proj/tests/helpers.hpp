#ifndef VEDOM_TEST_HELPERS_HPP
#define VEDOM_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "vedom/graph.hpp"
#include "vedom/reduction_3dm.hpp"
#include "vedom/trees.hpp"

namespace vedom::test {

// Independent oracle: tree isomorphism by trying every vertex bijection.
inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges)
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Independent oracle: all maximal cliques via Bron-Kerbosch with pivoting.
inline void bron_kerbosch(const Graph& g, std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                          std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    int pivot = !P.empty() ? P.front() : X.front();
    std::vector<int> cand;
    for (int v : P)
        if (!g.has_edge(pivot, v)) cand.push_back(v);
    for (int v : cand) {
        std::vector<int> P2, X2;
        for (int w : P)
            if (g.has_edge(v, w)) P2.push_back(w);
        for (int w : X)
            if (g.has_edge(v, w)) X2.push_back(w);
        R.push_back(v);
        bron_kerbosch(g, R, P2, X2, out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
}

inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<int> R, P(g.n), X;
    std::iota(P.begin(), P.end(), 0);
    std::vector<std::vector<int>> out;
    bron_kerbosch(g, R, P, X, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Random connected graph (not necessarily a block graph): random tree plus
// random extra edges.
inline Graph random_connected_graph(int n, uint64_t seed, int extra_edges) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    std::set<std::pair<int, int>> have(edges.begin(), edges.end());
    for (int t = 0; t < 4 * extra_edges && static_cast<int>(edges.size()) < n - 1 + extra_edges; ++t) {
        int a = rng.below(n), b = rng.below(n);
        if (a == b) continue;
        auto e = std::minmax(a, b);
        if (have.insert({e.first, e.second}).second) edges.push_back({e.first, e.second});
    }
    return Graph::from_edges(n, std::move(edges));
}

// Every 3dm instance shape with p <= 2, q <= 2.
inline std::vector<ThreeDMInstance> small_3dm_corpus() {
    std::vector<ThreeDMInstance> corpus;
    corpus.push_back({1, {{1, 1, 1}}});
    std::vector<std::array<int, 3>> all;
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s)
            for (int t = 1; t <= 2; ++t) all.push_back({r, s, t});
    for (size_t i = 0; i < all.size(); ++i) corpus.push_back({2, {all[i]}});
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) corpus.push_back({2, {all[i], all[j]}});
    return corpus;
}

} // namespace vedom::test

#endif
