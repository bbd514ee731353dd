#ifndef VEDOM_BLOCK_SOLVER_HPP
#define VEDOM_BLOCK_SOLVER_HPP

#include <string>
#include <vector>

#include "vedom/blocks.hpp"
#include "vedom/graph.hpp"
#include "vedom/oracles.hpp"

namespace vedom {

// One reduction case per processed end block, plus the two root outcomes.
enum class ReduceCase {
    required_ge2,          // >= 2 required edges: force the cut vertex
    required_one_off_cut,  // one required edge, not incident to the cut vertex
    required_one_at_cut,   // one required edge, incident: force the upward cut
    none_required,         // collect forced non-cut vertices
    root_required,         // root block still has required edges
    root_forced,           // root block: emit its forced vertices
};
const char* reduce_case_name(ReduceCase c);

struct TraceStep {
    int block = -1;
    ReduceCase kind;
    int labeled = -1;                                 // vertex newly forced, if any
    bool labeled_tie_break = false;                   // upward-cut choice was tied
    std::vector<int> collected;                       // vertices emitted to the output set
    std::vector<std::pair<int, int>> cleared_edges;   // edges whose requirement dropped
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    std::string to_json() const;
};

// Working state of the labeling reduction over a rooted block graph.
// Levels are block-tree hop counts from the root end block, which agrees
// with the pairwise-max distance formula for blocks with >= 2 vertices.
struct LabeledBlockGraph {
    Graph g;
    BlockDecomposition dec;
    int root_block = -1;
    int height = 0;
    std::vector<int> block_level;

    std::vector<char> vertex_forced;  // l
    std::vector<char> edge_required;  // m
    std::vector<char> vertex_removed;
    std::vector<char> block_alive;

    // incremental counters
    std::vector<int> required_in_block;   // t per block
    std::vector<int> required_at_vertex;  // incident required-edge count
    std::vector<int> alive_blocks_of;     // per vertex
    std::vector<int> live_cut_members;    // per block
    std::vector<int> anchor_block;        // min-level block containing v
    std::vector<std::vector<int>> block_edges;
    std::vector<std::vector<std::pair<int, int>>> adj_with_edge; // (neighbor, edge id)

    bool vertex_is_cut_now(int v) const { return alive_blocks_of[v] > 1; }
    int root_distance(int v) const { return anchor_block[v] == root_block ? 0 : block_level[anchor_block[v]]; }
    int alive_block_count() const;
    // Graph induced by the still-alive vertices, with its labels (test support).
    void current_labeled_graph(Graph& out, std::vector<char>& forced, std::vector<char>& required) const;
};

// Algorithm entry state: no forced vertices, every edge required.
LabeledBlockGraph initial_labeling(const Graph& g);

// General labeled state for the optional variant; forced is per vertex,
// required per edge (indexed like Graph::edges). Labels must satisfy the
// forcing invariant: a forced vertex clears every edge around its closed
// neighborhood.
LabeledBlockGraph labeled_block_graph(const Graph& g, const std::vector<char>& forced,
                                      const std::vector<char>& required);

struct StepResult {
    ReduceCase kind;
    std::vector<int> collected;
    std::vector<int> touched_blocks;  // blocks whose required count changed
    std::vector<int> new_end_blocks;
};

// Applies the single matching reduction case to end block b and deletes its
// non-cut vertices.
StepResult reduce_end_block(LabeledBlockGraph& state, int b, ReductionTrace* trace);

// Root block contribution once everything else is reduced away.
std::vector<int> solve_root(LabeledBlockGraph& state, ReductionTrace* trace);

struct BlockSolveOptions {
    bool check_invariants = false; // revalidate labeling invariants after every step
};

SolveResult solve_block_graph(const Graph& g, ReductionTrace* trace = nullptr,
                              const BlockSolveOptions& opts = {});

// Exact minimum independent ve-dominating set via dynamic programming over
// the rooted block-cut tree (one selected vertex per clique at most).
SolveResult solve_block_graph_independent(const Graph& g);

// Test support: recomputes every incremental counter and checks the labeling
// invariants (required edges form a clique per block; forcing a vertex clears
// every edge around its neighborhood). Throws errc::defect on violation.
void validate_labeled_state(const LabeledBlockGraph& state);

} // namespace vedom

#endif
