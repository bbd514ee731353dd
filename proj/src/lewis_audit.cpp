#include "vedom/lewis_audit.hpp"

#include <algorithm>

#include "json.hpp"

#include "vedom/trees.hpp"

namespace vedom {

SubdividedTree subdivide(const Graph& t) {
    if (!is_tree(t)) fail(errc::not_a_tree, "subdivide: input is not a tree");
    SubdividedTree out;
    int n = t.n;
    std::vector<std::pair<int, int>> edges;
    out.original.assign(n + t.edge_count(), 0);
    for (int v = 0; v < n; ++v) out.original[v] = 1;
    for (int e = 0; e < t.edge_count(); ++e) {
        auto [u, v] = t.edges[e];
        int mid = n + e;
        edges.emplace_back(u, mid);
        edges.emplace_back(mid, v);
        out.sub_of.push_back({u, v});
    }
    out.tree = Graph::from_edges(n + t.edge_count(), std::move(edges));
    return out;
}

namespace {

int weighted_min(const SubdividedTree& sub, const std::vector<int>& targets, const AuditOptions& opts) {
    WeightedInstance inst;
    inst.graph = sub.tree;
    inst.weight.assign(sub.tree.n, kForbiddenWeight);
    for (int v = 0; v < sub.tree.n; ++v)
        if (sub.original[v]) inst.weight[v] = 1;
    OracleOptions oo = opts.oracle;
    oo.vertex_cap = std::max(oo.vertex_cap, sub.tree.n); // candidates stay capped below
    auto res = weighted_d3dom_bruteforce(inst, targets, oo);
    return static_cast<int>(res.objective);
}

} // namespace

int lewis_value(const Graph& t, const AuditOptions& opts) {
    if (t.n > opts.oracle.vertex_cap)
        fail(errc::cap_exceeded, "lewis_value: tree exceeds brute-force cap");
    auto sub = subdivide(t);
    std::vector<int> targets(sub.tree.n);
    for (int v = 0; v < sub.tree.n; ++v) targets[v] = v;
    return weighted_min(sub, targets, opts);
}

int corrected_value(const Graph& t, const AuditOptions& opts) {
    if (t.n > opts.oracle.vertex_cap)
        fail(errc::cap_exceeded, "corrected_value: tree exceeds brute-force cap");
    auto sub = subdivide(t);
    std::vector<int> targets;
    for (int v = 0; v < sub.tree.n; ++v)
        if (!sub.original[v]) targets.push_back(v);
    return weighted_min(sub, targets, opts);
}

std::string AuditReport::to_json() const {
    nlohmann::json j;
    j["n"] = tree.n;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : tree.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["gamma_ve"] = gamma_ve;
    j["lewis_value"] = lewis;
    j["corrected_value"] = corrected;
    j["mismatch"] = mismatch;
    return j.dump();
}

AuditReport audit(const Graph& t, const AuditOptions& opts) {
    AuditReport rep;
    rep.tree = t;
    rep.canonical = canonical_form(t).encoding;
    rep.gamma_ve = static_cast<int>(gamma_ve_bruteforce(t, opts.oracle).objective);
    rep.lewis = lewis_value(t, opts);
    rep.corrected = corrected_value(t, opts);
    rep.mismatch = rep.gamma_ve != rep.lewis;
    return rep;
}

std::vector<AuditReport> search_counterexamples(int n_max, const AuditOptions& opts) {
    std::vector<AuditReport> out;
    for (int n = 3; n <= n_max; ++n) {
        std::vector<AuditReport> level;
        for (const Graph& t : enumerate_canonical_trees(n)) {
            AuditReport rep = audit(t, opts);
            if (rep.mismatch) level.push_back(std::move(rep));
        }
        std::sort(level.begin(), level.end(),
                  [](const AuditReport& a, const AuditReport& b) { return a.canonical < b.canonical; });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace vedom
