#include "vedom/block_solver.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "json.hpp"

namespace vedom {

const char* reduce_case_name(ReduceCase c) {
    switch (c) {
    case ReduceCase::required_ge2: return "tB>=2";
    case ReduceCase::required_one_off_cut: return "tB=1-not-incident-c";
    case ReduceCase::required_one_at_cut: return "tB=1-incident-c";
    case ReduceCase::none_required: return "tB=0";
    case ReduceCase::root_required: return "root-tB>0";
    case ReduceCase::root_forced: return "root-tB=0";
    }
    return "?";
}

std::string ReductionTrace::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json j;
        j["block"] = s.block;
        j["case"] = reduce_case_name(s.kind);
        if (s.labeled >= 0) j["labeled"] = s.labeled;
        if (s.labeled_tie_break) j["tie_break"] = true;
        j["collected"] = s.collected;
        nlohmann::json ce = nlohmann::json::array();
        for (auto [u, v] : s.cleared_edges) ce.push_back({u, v});
        j["cleared_edges"] = std::move(ce);
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

int LabeledBlockGraph::alive_block_count() const {
    int k = 0;
    for (char a : block_alive) k += a ? 1 : 0;
    return k;
}

void LabeledBlockGraph::current_labeled_graph(Graph& out, std::vector<char>& forced,
                                              std::vector<char>& required) const {
    std::vector<int> remap(g.n, -1);
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (!vertex_removed[v]) remap[v] = k++;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> req;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        if (remap[a] >= 0 && remap[b] >= 0) {
            edges.emplace_back(remap[a], remap[b]);
            req.push_back(edge_required[e]);
        }
    }
    // from_edges re-sorts; keep requirement flags aligned
    std::vector<std::pair<std::pair<int, int>, char>> zipped;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        if (a > b) std::swap(a, b);
        zipped.push_back({{a, b}, req[i]});
    }
    std::sort(zipped.begin(), zipped.end());
    edges.clear();
    req.clear();
    for (auto& [e, r] : zipped) {
        edges.push_back(e);
        req.push_back(r);
    }
    out = Graph::from_edges(k, edges);
    required = std::move(req);
    forced.assign(k, 0);
    for (int v = 0; v < g.n; ++v)
        if (remap[v] >= 0) forced[remap[v]] = vertex_forced[v];
}

LabeledBlockGraph labeled_block_graph(const Graph& g, const std::vector<char>& forced,
                                      const std::vector<char>& required) {
    if (static_cast<int>(forced.size()) != g.n || static_cast<int>(required.size()) != g.edge_count())
        fail(errc::validation, "labeled_block_graph: label vectors must be total");
    LabeledBlockGraph s = initial_labeling(g);
    s.vertex_forced = forced;
    s.edge_required = required;
    s.required_at_vertex.assign(g.n, 0);
    s.required_in_block.assign(s.dec.blocks.size(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (required[e]) {
            auto [u, v] = g.edges[e];
            ++s.required_at_vertex[u];
            ++s.required_at_vertex[v];
            ++s.required_in_block[s.dec.block_of_edge[e]];
        }
    try {
        validate_labeled_state(s);
    } catch (const error& e) {
        fail(errc::validation, std::string("labeled_block_graph: ") + e.what());
    }
    return s;
}

LabeledBlockGraph initial_labeling(const Graph& g) {
    if (g.n < 1) fail(errc::validation, "initial_labeling: empty graph");
    if (!is_connected(g)) fail(errc::disconnected, "initial_labeling: graph must be connected");
    if (g.edge_count() == 0) fail(errc::validation, "initial_labeling: graph needs at least one edge");

    LabeledBlockGraph s;
    s.g = g;
    s.dec = blocks_and_cut_vertices(g);
    int nb = static_cast<int>(s.dec.blocks.size());

    std::vector<long long> edges_in_block(nb, 0);
    for (int e = 0; e < g.edge_count(); ++e) ++edges_in_block[s.dec.block_of_edge[e]];
    for (int b = 0; b < nb; ++b) {
        long long k = static_cast<long long>(s.dec.blocks[b].size());
        if (edges_in_block[b] != k * (k - 1) / 2)
            fail(errc::not_a_block_graph, "initial_labeling: block " + std::to_string(b) + " is not a clique");
    }

    s.root_block = -1;
    for (int b = 0; b < nb; ++b)
        if (s.dec.is_end_block(b)) {
            s.root_block = b;
            break;
        }
    if (s.root_block < 0) fail(errc::defect, "initial_labeling: no end block found");

    // block levels = hop counts in the block adjacency structure
    s.block_level.assign(nb, -1);
    {
        std::queue<int> q;
        s.block_level[s.root_block] = 0;
        q.push(s.root_block);
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int v : s.dec.blocks[b]) {
                if (!s.dec.is_cut[v]) continue;
                for (int nb2 : s.dec.blocks_of_vertex[v])
                    if (s.block_level[nb2] < 0) {
                        s.block_level[nb2] = s.block_level[b] + 1;
                        q.push(nb2);
                    }
            }
        }
    }
    s.height = 0;
    for (int b = 0; b < nb; ++b)
        if (s.dec.is_end_block(b)) s.height = std::max(s.height, s.block_level[b]);

    s.vertex_forced.assign(g.n, 0);
    s.edge_required.assign(g.edge_count(), 1);
    s.vertex_removed.assign(g.n, 0);
    s.block_alive.assign(nb, 1);
    s.required_at_vertex.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) s.required_at_vertex[v] = g.degree(v);
    s.required_in_block.assign(nb, 0);
    s.block_edges.assign(nb, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        int b = s.dec.block_of_edge[e];
        s.block_edges[b].push_back(e);
        ++s.required_in_block[b];
    }
    s.alive_blocks_of.assign(g.n, 0);
    s.anchor_block.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        s.alive_blocks_of[v] = static_cast<int>(s.dec.blocks_of_vertex[v].size());
        int best = -1;
        for (int b : s.dec.blocks_of_vertex[v])
            if (best < 0 || s.block_level[b] < s.block_level[best]) best = b;
        s.anchor_block[v] = best;
    }
    s.adj_with_edge.assign(g.n, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        s.adj_with_edge[u].emplace_back(v, e);
        s.adj_with_edge[v].emplace_back(u, e);
    }
    s.live_cut_members.assign(nb, 0);
    for (int b = 0; b < nb; ++b)
        for (int v : s.dec.blocks[b]) s.live_cut_members[b] += s.dec.is_cut[v] ? 1 : 0;
    return s;
}

namespace {

// Clear the requirement on every edge with an endpoint in N[x]. A vertex's
// incident list is fully scanned at most once over the whole run: after the
// first scan all its incident edges are cleared.
void force_vertex(LabeledBlockGraph& s, int x, TraceStep* step, std::vector<int>& touched) {
    if (s.vertex_forced[x]) return;
    s.vertex_forced[x] = 1;
    auto clear_around = [&](int w) {
        if (s.required_at_vertex[w] == 0) return;
        for (auto [to, e] : s.adj_with_edge[w]) {
            if (!s.edge_required[e]) continue;
            s.edge_required[e] = 0;
            --s.required_at_vertex[w];
            --s.required_at_vertex[to];
            int be = s.dec.block_of_edge[e];
            --s.required_in_block[be];
            touched.push_back(be);
            if (step) step->cleared_edges.push_back({std::min(w, to), std::max(w, to)});
        }
    };
    clear_around(x);
    for (auto [w, e] : s.adj_with_edge[x]) {
        (void)e;
        if (!s.vertex_removed[w]) clear_around(w);
    }
}

// F(c): the cut vertex in N[c] closest to the root block.
int upward_cut(const LabeledBlockGraph& s, int c, bool* tied) {
    int best = -1, best_key = 0;
    bool tie = false;
    auto consider = [&](int w) {
        if (s.vertex_removed[w] || !s.vertex_is_cut_now(w)) return;
        int key = s.root_distance(w);
        if (best < 0 || key < best_key) {
            best = w;
            best_key = key;
            tie = false;
        } else if (key == best_key && w != best) {
            tie = true;
            if (w < best) best = w;
        }
    };
    consider(c);
    for (auto [w, e] : s.adj_with_edge[c]) {
        (void)e;
        consider(w);
    }
    if (best < 0) fail(errc::defect, "upward_cut: no cut vertex in the closed neighborhood");
    if (tied) *tied = tie;
    return best;
}

void retire_block(LabeledBlockGraph& s, int b, int cut, std::vector<int>& new_ends) {
    s.block_alive[b] = 0;
    if (--s.alive_blocks_of[cut] == 1) {
        int anchor = s.anchor_block[cut];
        if (--s.live_cut_members[anchor] == 1 && anchor != s.root_block) new_ends.push_back(anchor);
    }
}

} // namespace

StepResult reduce_end_block(LabeledBlockGraph& s, int b, ReductionTrace* trace) {
    if (b < 0 || b >= static_cast<int>(s.dec.blocks.size()) || !s.block_alive[b])
        fail(errc::validation, "reduce_end_block: block not alive");
    if (b == s.root_block) fail(errc::validation, "reduce_end_block: refusing to reduce the root block");
    if (s.live_cut_members[b] != 1) fail(errc::validation, "reduce_end_block: block is not an end block");

    int c = -1;
    for (int v : s.dec.blocks[b])
        if (!s.vertex_removed[v] && s.vertex_is_cut_now(v)) c = v;
    if (c < 0) fail(errc::defect, "reduce_end_block: end block without cut vertex");

    StepResult res;
    TraceStep step;
    step.block = b;
    TraceStep* rec = trace ? &step : nullptr;

    int t = s.required_in_block[b];
    if (t >= 1) {
        int required_edge = -1;
        for (int e : s.block_edges[b])
            if (s.edge_required[e]) {
                required_edge = e;
                break;
            }
        if (required_edge < 0) fail(errc::defect, "reduce_end_block: stale requirement count");
        auto [eu, ev] = s.g.edges[required_edge];
        if (t >= 2) {
            res.kind = ReduceCase::required_ge2;
            step.labeled = c;
            force_vertex(s, c, rec, res.touched_blocks);
        } else if (eu != c && ev != c) {
            res.kind = ReduceCase::required_one_off_cut;
            step.labeled = c;
            force_vertex(s, c, rec, res.touched_blocks);
        } else {
            res.kind = ReduceCase::required_one_at_cut;
            bool tied = false;
            int fc = upward_cut(s, c, &tied);
            step.labeled = fc;
            step.labeled_tie_break = tied;
            force_vertex(s, fc, rec, res.touched_blocks);
        }
    } else {
        res.kind = ReduceCase::none_required;
        for (int v : s.dec.blocks[b])
            if (v != c && !s.vertex_removed[v] && s.vertex_forced[v]) res.collected.push_back(v);
        std::sort(res.collected.begin(), res.collected.end());
        step.collected = res.collected;
    }
    step.kind = res.kind;

    for (int v : s.dec.blocks[b])
        if (v != c && !s.vertex_removed[v]) {
            s.vertex_removed[v] = 1;
            s.alive_blocks_of[v] = 0;
        }
    retire_block(s, b, c, res.new_end_blocks);

    std::sort(res.touched_blocks.begin(), res.touched_blocks.end());
    res.touched_blocks.erase(std::unique(res.touched_blocks.begin(), res.touched_blocks.end()),
                             res.touched_blocks.end());
    if (trace) trace->steps.push_back(std::move(step));
    return res;
}

std::vector<int> solve_root(LabeledBlockGraph& s, ReductionTrace* trace) {
    int b = s.root_block;
    TraceStep step;
    step.block = b;
    std::vector<int> out;
    if (s.required_in_block[b] > 0) {
        step.kind = ReduceCase::root_required;
        int pick = -1;
        for (int e : s.block_edges[b])
            if (s.edge_required[e]) {
                auto [u, v] = s.g.edges[e];
                if (pick < 0 || std::min(u, v) < pick) pick = std::min(u, v);
            }
        out.push_back(pick);
    } else {
        step.kind = ReduceCase::root_forced;
        for (int v : s.dec.blocks[b])
            if (!s.vertex_removed[v] && s.vertex_forced[v]) out.push_back(v);
        std::sort(out.begin(), out.end());
    }
    step.collected = out;
    if (trace) trace->steps.push_back(std::move(step));
    return out;
}

SolveResult solve_block_graph(const Graph& g, ReductionTrace* trace, const BlockSolveOptions& opts) {
    LabeledBlockGraph s = initial_labeling(g);
    int nb = static_cast<int>(s.dec.blocks.size());

    // Per-level lazy max-heaps ordered by required-edge count, then id.
    using Entry = std::pair<int, int>; // (t, -block)
    std::vector<std::priority_queue<Entry>> heap(s.height + 1);
    auto push_block = [&](int b) {
        if (b == s.root_block || !s.block_alive[b]) return;
        if (s.live_cut_members[b] != 1) return;
        heap[s.block_level[b]].push({s.required_in_block[b], -b});
    };
    for (int b = 0; b < nb; ++b) push_block(b);

    std::vector<int> collected;
    for (int level = s.height; level >= 1; --level) {
        auto& h = heap[level];
        while (!h.empty()) {
            auto [t, negb] = h.top();
            h.pop();
            int b = -negb;
            if (!s.block_alive[b] || t != s.required_in_block[b]) continue;
            StepResult r = reduce_end_block(s, b, trace);
            if (opts.check_invariants) validate_labeled_state(s);
            collected.insert(collected.end(), r.collected.begin(), r.collected.end());
            for (int tb : r.touched_blocks) push_block(tb);
            for (int eb : r.new_end_blocks) push_block(eb);
        }
    }
    if (s.alive_block_count() != 1)
        fail(errc::defect, "solve_block_graph: reduction left more than the root block");

    auto root = solve_root(s, trace);
    collected.insert(collected.end(), root.begin(), root.end());
    std::sort(collected.begin(), collected.end());
    SolveResult res{Variant::ve, std::move(collected), 0};
    res.objective = res.cardinality();
    return res;
}

void validate_labeled_state(const LabeledBlockGraph& s) {
    const Graph& g = s.g;
    // counters agree with recomputation
    std::vector<int> req_v(g.n, 0), req_b(s.dec.blocks.size(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (s.edge_required[e]) {
            auto [u, v] = g.edges[e];
            if (s.vertex_removed[u] || s.vertex_removed[v])
                fail(errc::defect, "labeled state: required edge with removed endpoint");
            ++req_v[u];
            ++req_v[v];
            ++req_b[s.dec.block_of_edge[e]];
        }
    for (int v = 0; v < g.n; ++v)
        if (!s.vertex_removed[v] && req_v[v] != s.required_at_vertex[v])
            fail(errc::defect, "labeled state: stale per-vertex requirement count");
    for (size_t b = 0; b < s.dec.blocks.size(); ++b)
        if (s.block_alive[b] && req_b[b] != s.required_in_block[b])
            fail(errc::defect, "labeled state: stale per-block requirement count");

    // forced vertex => every edge around its closed neighborhood is cleared
    for (int x = 0; x < g.n; ++x) {
        if (!s.vertex_forced[x] || s.vertex_removed[x]) continue;
        auto check_vertex = [&](int w) {
            if (s.vertex_removed[w]) return;
            if (req_v[w] != 0) fail(errc::defect, "labeled state: required edge near forced vertex");
        };
        check_vertex(x);
        for (int w : g.adj[x]) check_vertex(w);
    }

    // required edges within any block form a clique
    for (size_t b = 0; b < s.dec.blocks.size(); ++b) {
        if (!s.block_alive[b]) continue;
        std::vector<int> ends;
        for (int e : s.block_edges[b])
            if (s.edge_required[e]) {
                ends.push_back(g.edges[e].first);
                ends.push_back(g.edges[e].second);
            }
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        std::vector<char> in_ends(g.n, 0);
        for (int v : ends) in_ends[v] = 1;
        for (int e : s.block_edges[b]) {
            auto [u, v] = g.edges[e];
            if (in_ends[u] && in_ends[v] && !s.edge_required[e])
                fail(errc::defect, "labeled state: required edges do not form a clique in block " +
                                       std::to_string(b));
        }
    }
}

// ---------------------------------------------------------------------------
// independent variant: DP over the rooted block-cut tree

namespace {

constexpr long long kInf = 1LL << 50;

// cut-vertex states
enum : int { cIN = 0, cADJ = 1, cPEND = 2, cOK = 3 };
// block configurations
enum : int { bROOT_SEL = 0, bSEL = 1, bOK = 2, bNEED = 3 }; // bROOT_SEL doubles as "parent selected"

struct IndepDP {
    const Graph& g;
    const BlockDecomposition& dec;
    int root_block;
    std::vector<int> parent_cut;                 // per block, -1 for root
    std::vector<int> order;                      // blocks, root first
    std::vector<std::array<long long, 4>> H;     // per block: [parent-in-S, SEL, OK, NEED]
    std::vector<std::array<long long, 4>> F;     // per cut vertex
    struct BlockChoice {
        int sel_leaf = -1, sel_cut = -1;
        std::vector<uint8_t> cut_state; // aligned with cut member list
    };
    std::vector<std::array<BlockChoice, 4>> hchoice;
    struct CutChoice {
        std::vector<uint8_t> block_cfg; // aligned with child block list
    };
    std::vector<std::array<CutChoice, 4>> fchoice;
    std::vector<std::vector<int>> child_blocks;  // per cut vertex
    std::vector<std::vector<int>> cut_members;   // per block (excluding parent cut)
    std::vector<std::vector<int>> leaf_members;  // per block (excluding parent cut)

    IndepDP(const Graph& g_, const BlockDecomposition& dec_) : g(g_), dec(dec_) {}

    void build() {
        int nb = static_cast<int>(dec.blocks.size());
        parent_cut.assign(nb, -1);
        std::vector<int> level(nb, -1);
        root_block = 0;
        std::queue<int> q;
        level[root_block] = 0;
        q.push(root_block);
        order = {root_block};
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int v : dec.blocks[b]) {
                if (!dec.is_cut[v]) continue;
                for (int b2 : dec.blocks_of_vertex[v])
                    if (level[b2] < 0) {
                        level[b2] = level[b] + 1;
                        parent_cut[b2] = v;
                        order.push_back(b2);
                        q.push(b2);
                    }
            }
        }
        child_blocks.assign(g.n, {});
        for (int b = 0; b < nb; ++b)
            if (b != root_block) child_blocks[parent_cut[b]].push_back(b);
        cut_members.assign(nb, {});
        leaf_members.assign(nb, {});
        for (int b = 0; b < nb; ++b)
            for (int v : dec.blocks[b]) {
                if (b != root_block && v == parent_cut[b]) continue;
                if (dec.is_cut[v])
                    cut_members[b].push_back(v);
                else
                    leaf_members[b].push_back(v);
            }
        H.assign(nb, {kInf, kInf, kInf, kInf});
        hchoice.assign(nb, {});
        F.assign(g.n, {kInf, kInf, kInf, kInf});
        fchoice.assign(g.n, {});
    }

    void compute_cut(int v) {
        const auto& kids = child_blocks[v];
        int k = static_cast<int>(kids.size());
        // IN: every child block sees a selected parent
        {
            long long total = 1;
            for (int b : kids) total = total > kInf ? kInf : total + H[b][bROOT_SEL];
            F[v][cIN] = std::min(total, kInf);
            fchoice[v][cIN].block_cfg.assign(k, bROOT_SEL);
        }
        // ADJ: no v; at least one child block selects internally
        {
            long long total = 0;
            std::vector<uint8_t> cfg(k);
            int best_upgrade = -1;
            long long best_delta = kInf;
            bool has_sel = false;
            for (int i = 0; i < k; ++i) {
                int b = kids[i];
                long long m = std::min({H[b][bSEL], H[b][bOK], H[b][bNEED]});
                cfg[i] = H[b][bSEL] == m ? bSEL : (H[b][bOK] <= H[b][bNEED] ? bOK : bNEED);
                if (cfg[i] == bSEL) has_sel = true;
                total = std::min(total + m, kInf);
                long long delta = H[b][bSEL] >= kInf ? kInf : H[b][bSEL] - m;
                if (delta < best_delta) {
                    best_delta = delta;
                    best_upgrade = i;
                }
            }
            if (!has_sel && best_upgrade >= 0 && best_delta < kInf && total < kInf) {
                total += best_delta;
                cfg[best_upgrade] = bSEL;
                has_sel = true;
            }
            F[v][cADJ] = has_sel && total < kInf ? total : kInf;
            fchoice[v][cADJ].block_cfg = std::move(cfg);
        }
        // PEND / OK: no selection below at distance <= 1; NEED allowed only for PEND
        {
            long long total_ok = 0;
            std::vector<uint8_t> cfg_ok(k, bOK);
            for (int i = 0; i < k; ++i) total_ok = std::min(total_ok + H[kids[i]][bOK], kInf);
            F[v][cOK] = total_ok;
            fchoice[v][cOK].block_cfg = std::move(cfg_ok);

            long long total = 0;
            std::vector<uint8_t> cfg(k);
            bool has_need = false;
            int best_flip = -1;
            long long best_delta = kInf;
            for (int i = 0; i < k; ++i) {
                int b = kids[i];
                long long m = std::min(H[b][bOK], H[b][bNEED]);
                cfg[i] = H[b][bNEED] <= H[b][bOK] ? bNEED : bOK;
                if (cfg[i] == bNEED) has_need = true;
                total = std::min(total + m, kInf);
                long long delta = H[b][bNEED] >= kInf ? kInf : H[b][bNEED] - m;
                if (delta < best_delta) {
                    best_delta = delta;
                    best_flip = i;
                }
            }
            if (!has_need && best_flip >= 0 && best_delta < kInf && total < kInf) {
                total += best_delta;
                cfg[best_flip] = bNEED;
                has_need = true;
            }
            F[v][cPEND] = has_need && total < kInf ? total : kInf;
            fchoice[v][cPEND].block_cfg = std::move(cfg);
        }
    }

    long long cut_not_selected_any(int v, uint8_t* state) const {
        long long m = std::min({F[v][cADJ], F[v][cPEND], F[v][cOK]});
        if (state) *state = F[v][cADJ] == m ? cADJ : (F[v][cPEND] <= F[v][cOK] ? cPEND : cOK);
        return m;
    }

    void compute_block(int b) {
        const auto& cuts = cut_members[b];
        int k = static_cast<int>(cuts.size());
        int leaves = static_cast<int>(leaf_members[b].size());

        // parent cut selected: nobody inside b may be selected
        {
            long long total = 0;
            std::vector<uint8_t> cs(k);
            for (int i = 0; i < k; ++i) total = std::min(total + cut_not_selected_any(cuts[i], &cs[i]), kInf);
            H[b][bROOT_SEL] = total;
            hchoice[b][bROOT_SEL].cut_state = std::move(cs);
        }
        // one selected member (leaf, or a cut member in state IN)
        {
            long long base = 0;
            std::vector<uint8_t> cs(k);
            for (int i = 0; i < k; ++i) base = std::min(base + cut_not_selected_any(cuts[i], &cs[i]), kInf);
            long long best = kInf;
            BlockChoice choice;
            if (leaves > 0 && base < kInf) {
                best = base + 1;
                choice.sel_leaf = leaf_members[b][0];
                choice.cut_state = cs;
            }
            for (int j = 0; j < k; ++j) {
                if (F[cuts[j]][cIN] >= kInf) continue;
                long long val = F[cuts[j]][cIN];
                std::vector<uint8_t> cs2(k);
                bool ok = true;
                for (int i = 0; i < k && ok; ++i) {
                    if (i == j) {
                        cs2[i] = cIN;
                        continue;
                    }
                    long long m = cut_not_selected_any(cuts[i], &cs2[i]);
                    if (m >= kInf) ok = false;
                    val = std::min(val + m, kInf);
                }
                if (ok && val < best) {
                    best = val;
                    choice.sel_leaf = -1;
                    choice.sel_cut = cuts[j];
                    choice.cut_state = std::move(cs2);
                }
            }
            H[b][bSEL] = best;
            hchoice[b][bSEL] = std::move(choice);
        }
        // no selection: every member needs outside help except at most one
        {
            long long total = 0;
            std::vector<uint8_t> cs(k, cADJ);
            for (int i = 0; i < k; ++i) total = std::min(total + F[cuts[i]][cADJ], kInf);
            H[b][bOK] = leaves == 0 ? total : kInf;
            hchoice[b][bOK].cut_state = cs;

            long long need = kInf;
            BlockChoice nchoice;
            if (leaves == 1 && total < kInf) {
                need = total;
                nchoice.cut_state = cs;
            } else if (leaves == 0) {
                for (int j = 0; j < k; ++j) {
                    if (F[cuts[j]][cOK] >= kInf) continue;
                    long long val = F[cuts[j]][cOK];
                    bool ok = true;
                    for (int i = 0; i < k && ok; ++i) {
                        if (i == j) continue;
                        if (F[cuts[i]][cADJ] >= kInf) ok = false;
                        val = std::min(val + F[cuts[i]][cADJ], kInf);
                    }
                    if (ok && val < need) {
                        need = val;
                        nchoice.cut_state.assign(k, cADJ);
                        nchoice.cut_state[j] = cOK;
                    }
                }
            }
            H[b][bNEED] = need;
            hchoice[b][bNEED] = std::move(nchoice);
        }
    }

    // root block: same as compute_block but "no selection" must leave at
    // most one uncovered-capable member in total and there is no parent
    long long solve_root_block(int b, BlockChoice& choice) {
        const auto& cuts = cut_members[b];
        int k = static_cast<int>(cuts.size());
        int leaves = static_cast<int>(leaf_members[b].size());
        long long best = kInf;
        {
            long long base = 0;
            std::vector<uint8_t> cs(k);
            for (int i = 0; i < k; ++i) base = std::min(base + cut_not_selected_any(cuts[i], &cs[i]), kInf);
            if (leaves > 0 && base < kInf) {
                best = base + 1;
                choice.sel_leaf = leaf_members[b][0];
                choice.cut_state = cs;
            }
            for (int j = 0; j < k; ++j) {
                if (F[cuts[j]][cIN] >= kInf) continue;
                long long val = F[cuts[j]][cIN];
                std::vector<uint8_t> cs2(k);
                bool ok = true;
                for (int i = 0; i < k && ok; ++i) {
                    if (i == j) {
                        cs2[i] = cIN;
                        continue;
                    }
                    long long m = cut_not_selected_any(cuts[i], &cs2[i]);
                    if (m >= kInf) ok = false;
                    val = std::min(val + m, kInf);
                }
                if (ok && val < best) {
                    best = val;
                    choice.sel_leaf = -1;
                    choice.sel_cut = cuts[j];
                    choice.cut_state = std::move(cs2);
                }
            }
        }
        // no selection anywhere in the root block
        if (leaves <= 1) {
            long long total = 0;
            bool ok = true;
            std::vector<uint8_t> cs(k, cADJ);
            for (int i = 0; i < k && ok; ++i) {
                if (F[cuts[i]][cADJ] >= kInf) ok = false;
                total = std::min(total + F[cuts[i]][cADJ], kInf);
            }
            if (ok && leaves == 0) {
                // optionally one cut member may drop to OK
                if (total < best) {
                    best = total;
                    choice = BlockChoice{};
                    choice.cut_state = cs;
                }
                for (int j = 0; j < k; ++j) {
                    if (F[cuts[j]][cOK] >= kInf || F[cuts[j]][cADJ] >= kInf) continue;
                    long long val = total - F[cuts[j]][cADJ] + F[cuts[j]][cOK];
                    if (val < best) {
                        best = val;
                        choice = BlockChoice{};
                        choice.cut_state = cs;
                        choice.cut_state[j] = cOK;
                    }
                }
            } else if (ok && leaves == 1 && total < best) {
                best = total;
                choice = BlockChoice{};
                choice.cut_state = cs;
            }
        }
        return best;
    }

    void reconstruct_block(int b, int cfg, const BlockChoice& choice, std::vector<int>& out) const {
        if (choice.sel_leaf >= 0) out.push_back(choice.sel_leaf);
        const auto& cuts = cut_members[b];
        for (size_t i = 0; i < cuts.size(); ++i) reconstruct_cut(cuts[i], choice.cut_state[i], out);
        (void)cfg;
    }

    void reconstruct_cut(int v, int state, std::vector<int>& out) const {
        if (state == cIN) out.push_back(v);
        const auto& kids = child_blocks[v];
        const auto& cfgs = fchoice[v][state].block_cfg;
        for (size_t i = 0; i < kids.size(); ++i)
            reconstruct_block(kids[i], cfgs[i], hchoice[kids[i]][cfgs[i]], out);
    }
};

} // namespace

SolveResult solve_block_graph_independent(const Graph& g) {
    if (g.n < 1) fail(errc::validation, "solve_block_graph_independent: empty graph");
    if (!is_connected(g)) fail(errc::disconnected, "solve_block_graph_independent: graph must be connected");
    if (!is_block_graph(g)) fail(errc::not_a_block_graph, "solve_block_graph_independent: not a block graph");

    auto dec = blocks_and_cut_vertices(g);
    IndepDP dp(g, dec);
    dp.build();
    for (auto it = dp.order.rbegin(); it != dp.order.rend(); ++it) {
        int b = *it;
        for (int v : dp.cut_members[b]) dp.compute_cut(v);
        if (b != dp.root_block) dp.compute_block(b);
    }
    IndepDP::BlockChoice root_choice;
    long long best = dp.solve_root_block(dp.root_block, root_choice);
    if (best >= kInf) fail(errc::defect, "solve_block_graph_independent: no feasible set found");

    std::vector<int> set;
    dp.reconstruct_block(dp.root_block, bSEL, root_choice, set);
    std::sort(set.begin(), set.end());
    if (static_cast<long long>(set.size()) != best)
        fail(errc::defect, "solve_block_graph_independent: reconstruction size mismatch");
    SolveResult res{Variant::independent_ve, std::move(set), best};
    return res;
}

} // namespace vedom
