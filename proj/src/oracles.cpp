#include "vedom/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "json.hpp"

namespace vedom {

std::string variant_name(Variant v) {
    switch (v) {
    case Variant::ve: return "ve";
    case Variant::independent_ve: return "independent-ve";
    case Variant::optional_ve: return "optional-ve";
    case Variant::weighted_distance3: return "weighted-distance-3";
    }
    return "?";
}

std::string SolveResult::to_json() const {
    nlohmann::json j;
    j["variant"] = variant_name(variant);
    j["objective"] = objective;
    j["cardinality"] = cardinality();
    j["set"] = set;
    return j.dump();
}

std::vector<std::pair<int, int>> ve_dominated_edges(const Graph& g, int u) {
    if (!g.has_vertex(u)) fail(errc::validation, "ve_dominated_edges: vertex not in graph");
    std::vector<char> near(g.n, 0);
    near[u] = 1;
    for (int w : g.adj[u]) near[w] = 1;
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : g.edges)
        if (near[a] || near[b]) out.emplace_back(a, b);
    return out;
}

namespace {

// covered-edge bitmask per vertex, over ceil(m/64) words
struct CoverMasks {
    int words;
    std::vector<uint64_t> full;
    std::vector<std::vector<uint64_t>> by_vertex;

    explicit CoverMasks(const Graph& g) {
        int m = g.edge_count();
        words = (m + 63) / 64;
        full.assign(words, 0);
        for (int e = 0; e < m; ++e) full[e >> 6] |= 1ULL << (e & 63);
        by_vertex.assign(g.n, std::vector<uint64_t>(words, 0));
        std::vector<char> near(g.n, 0);
        for (int u = 0; u < g.n; ++u) {
            near.assign(g.n, 0);
            near[u] = 1;
            for (int w : g.adj[u]) near[w] = 1;
            auto& mask = by_vertex[u];
            for (int e = 0; e < m; ++e) {
                auto [a, b] = g.edges[e];
                if (near[a] || near[b]) mask[e >> 6] |= 1ULL << (e & 63);
            }
        }
    }
};

bool covers_all(const CoverMasks& cm, const std::vector<int>& set) {
    for (int w = 0; w < cm.words; ++w) {
        uint64_t acc = 0;
        for (int v : set) acc |= cm.by_vertex[v][w];
        if (acc != cm.full[w]) return false;
    }
    return true;
}

// Lexicographic combinations of {0..n-1} of size k; fn returns true to stop.
bool for_each_combination(int n, int k, std::vector<int>& buf,
                          const std::function<bool(const std::vector<int >&)>& fn) {
    buf.assign(k, 0);
    for (int i = 0; i < k; ++i) buf[i] = i;
    if (k > n) return false;
    while (true) {
        if (fn(buf)) return true;
        int i = k - 1;
        while (i >= 0 && buf[i] == n - (k - i)) --i;
        if (i < 0) return false;
        ++buf[i];
        for (int j = i + 1; j < k; ++j) buf[j] = buf[j - 1] + 1;
    }
}

void check_cap(const Graph& g, const OracleOptions& opts, const char* what) {
    if (g.n > opts.vertex_cap)
        fail(errc::cap_exceeded, std::string(what) + ": n=" + std::to_string(g.n) +
                                     " exceeds brute-force cap " + std::to_string(opts.vertex_cap));
    if (g.n > 64) fail(errc::cap_exceeded, std::string(what) + ": n > 64 unsupported");
}

} // namespace

bool is_ve_dominating(const Graph& g, const std::vector<int>& set) {
    std::vector<char> near(g.n, 0);
    for (int v : set) {
        if (!g.has_vertex(v)) fail(errc::validation, "is_ve_dominating: set member not in graph");
        near[v] = 1;
        for (int w : g.adj[v]) near[w] = 1;
    }
    for (auto [a, b] : g.edges)
        if (!near[a] && !near[b]) return false;
    return true;
}

bool is_independent_set(const Graph& g, const std::vector<int>& set) {
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) return false;
    return true;
}

std::optional<SolveResult> gamma_ve_bruteforce_bounded(const Graph& g, int max_cardinality,
                                                       const OracleOptions& opts) {
    check_cap(g, opts, "gamma_ve_bruteforce");
    CoverMasks cm(g);
    int hi = std::min(max_cardinality, g.n);
    std::vector<int> buf;
    for (int k = 0; k <= hi; ++k) {
        SolveResult res{Variant::ve, {}, 0};
        bool found = for_each_combination(g.n, k, buf, [&](const std::vector<int>& set) {
            if (!covers_all(cm, set)) return false;
            res.set = set;
            return true;
        });
        if (found) {
            res.objective = k;
            return res;
        }
    }
    return std::nullopt;
}

SolveResult gamma_ve_bruteforce(const Graph& g, const OracleOptions& opts) {
    auto res = gamma_ve_bruteforce_bounded(g, g.n, opts);
    return *res; // the full vertex set always ve-dominates
}

SolveResult i_ve_bruteforce(const Graph& g, const OracleOptions& opts) {
    check_cap(g, opts, "i_ve_bruteforce");
    CoverMasks cm(g);
    std::vector<uint64_t> nbr(g.n, 0);
    for (auto [a, b] : g.edges) {
        nbr[a] |= 1ULL << b;
        nbr[b] |= 1ULL << a;
    }
    std::vector<int> buf;
    for (int k = 0; k <= g.n; ++k) {
        SolveResult res{Variant::independent_ve, {}, 0};
        bool found = for_each_combination(g.n, k, buf, [&](const std::vector<int>& set) {
            uint64_t chosen = 0;
            for (int v : set) {
                if (nbr[v] & chosen) return false;
                chosen |= 1ULL << v;
            }
            if (!covers_all(cm, set)) return false;
            res.set = set;
            return true;
        });
        if (found) {
            res.objective = k;
            return res;
        }
    }
    // a maximal independent set always ve-dominates, so this is unreachable
    fail(errc::defect, "i_ve_bruteforce: no independent ve-dominating set found");
}

SolveResult gamma_opve_bruteforce(const Graph& g, const std::vector<char>& forced,
                                  const std::vector<char>& required, const OracleOptions& opts) {
    check_cap(g, opts, "gamma_opve_bruteforce");
    if (static_cast<int>(forced.size()) != g.n || static_cast<int>(required.size()) != g.edge_count())
        fail(errc::validation, "gamma_opve_bruteforce: label vectors must be total");
    CoverMasks cm(g);
    int words = cm.words;
    std::vector<uint64_t> need(words, 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (required[e]) need[e >> 6] |= 1ULL << (e & 63);

    std::vector<int> base, free_verts;
    for (int v = 0; v < g.n; ++v) (forced[v] ? base : free_verts).push_back(v);
    std::vector<uint64_t> base_cover(words, 0);
    for (int v : base)
        for (int w = 0; w < words; ++w) base_cover[w] |= cm.by_vertex[v][w];

    auto satisfied = [&](const std::vector<int>& extra) {
        for (int w = 0; w < words; ++w) {
            uint64_t acc = base_cover[w];
            for (int i : extra) acc |= cm.by_vertex[free_verts[i]][w];
            if ((acc & need[w]) != need[w]) return false;
        }
        return true;
    };

    int f = static_cast<int>(free_verts.size());
    std::vector<int> buf;
    for (int k = 0; k <= f; ++k) {
        SolveResult res{Variant::optional_ve, {}, 0};
        bool found = for_each_combination(f, k, buf, [&](const std::vector<int>& extra) {
            if (!satisfied(extra)) return false;
            res.set = base;
            for (int i : extra) res.set.push_back(free_verts[i]);
            std::sort(res.set.begin(), res.set.end());
            return true;
        });
        if (found) {
            res.objective = res.cardinality();
            return res;
        }
    }
    fail(errc::infeasible, "gamma_opve_bruteforce: required edges not coverable");
}

SolveResult weighted_d3dom_bruteforce(const WeightedInstance& inst, const std::vector<int>& targets,
                                      const OracleOptions& opts) {
    const Graph& g = inst.graph;
    check_cap(g, opts, "weighted_d3dom_bruteforce");
    if (static_cast<int>(inst.weight.size()) != g.n)
        fail(errc::validation, "weighted_d3dom_bruteforce: weight vector must be total");
    for (long long w : inst.weight)
        if (w != kForbiddenWeight && w <= 0)
            fail(errc::validation, "weighted_d3dom_bruteforce: weights must be positive or forbidden");
    for (int t : targets)
        if (!g.has_vertex(t)) fail(errc::validation, "weighted_d3dom_bruteforce: target not in graph");

    std::vector<int> cand;
    for (int v = 0; v < g.n; ++v)
        if (inst.weight[v] != kForbiddenWeight) cand.push_back(v);
    int c = static_cast<int>(cand.size());
    if (c > 30) fail(errc::cap_exceeded, "weighted_d3dom_bruteforce: too many candidates");

    uint64_t all_targets = 0;
    for (size_t i = 0; i < targets.size(); ++i) all_targets |= 1ULL << i;
    if (targets.size() > 64) fail(errc::cap_exceeded, "weighted_d3dom_bruteforce: too many targets");

    std::vector<uint64_t> reach(c, 0);
    for (int i = 0; i < c; ++i) {
        auto dist = bfs_distances(g, cand[i]);
        for (size_t t = 0; t < targets.size(); ++t)
            if (dist[targets[t]] >= 0 && dist[targets[t]] <= 3) reach[i] |= 1ULL << t;
    }
    uint64_t reachable = 0;
    for (int i = 0; i < c; ++i) reachable |= reach[i];
    if (reachable != all_targets)
        fail(errc::infeasible, "weighted_d3dom_bruteforce: some target beyond distance 3 of every candidate");

    long long best_weight = -1;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < (1u << c); ++mask) {
        uint64_t cov = 0;
        long long wsum = 0;
        for (int i = 0; i < c; ++i)
            if (mask >> i & 1) {
                cov |= reach[i];
                wsum += inst.weight[cand[i]];
            }
        if (cov != all_targets) continue;
        if (best_weight < 0 || wsum < best_weight) {
            best_weight = wsum;
            best_mask = mask;
        } else if (wsum == best_weight) {
            uint32_t diff = mask ^ best_mask;
            uint32_t low = diff & (~diff + 1);
            if (mask & low) best_mask = mask; // lex-smaller candidate set
        }
    }
    SolveResult res{Variant::weighted_distance3, {}, best_weight};
    for (int i = 0; i < c; ++i)
        if (best_mask >> i & 1) res.set.push_back(cand[i]);
    return res;
}

} // namespace vedom
