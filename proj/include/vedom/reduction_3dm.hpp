#ifndef VEDOM_REDUCTION_3DM_HPP
#define VEDOM_REDUCTION_3DM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vedom/graph.hpp"

namespace vedom {

// A 3-dimensional matching instance: q elements per dimension, triples with
// 1-based coordinates.
struct ThreeDMInstance {
    int q = 0;
    std::vector<std::array<int, 3>> triples;
    int p() const { return static_cast<int>(triples.size()); }
};

ThreeDMInstance parse_3dm(const std::string& json_text);
std::string threedm_to_json(const ThreeDMInstance& inst);

// Clique tree of the target undirected path graph: nodes are vertex sets of
// the graph; every graph vertex's nodes must induce a path in the tree.
struct CliqueTree {
    std::vector<std::vector<int>> nodes;
    std::vector<std::pair<int, int>> tree_edges;
};

struct Gadget {
    ThreeDMInstance instance;
    CliqueTree clique_tree;
    Graph graph;
    std::vector<std::string> vertex_names; // "A3", "R2", ...
    std::string sidecar_json() const;
};

Gadget build_gadget(const ThreeDMInstance& inst);

// Just the clique tree of build_gadget.
CliqueTree build_clique_tree(const ThreeDMInstance& inst);

Graph graph_from_clique_tree(const CliqueTree& ct);

struct PathPropertyReport {
    bool ok = true;
    std::vector<int> offending_vertices;
};
PathPropertyReport verify_path_property(const CliqueTree& ct);

// A matching is a list of triple indices, pairwise disjoint in every
// coordinate and of size q. Search is exhaustive.
std::optional<std::vector<int>> solve_3dm_bruteforce(const ThreeDMInstance& inst);
bool is_valid_matching(const ThreeDMInstance& inst, const std::vector<int>& matching);

// Claim-style translation: matched triples contribute their three clique-tree
// hub vertices, unmatched triples their two deep vertices. Size is 2p+q.
std::vector<int> matching_to_ve_set(const Gadget& gadget, const std::vector<int>& matching);

// Inverse direction: normalize a ve-dominating set of size 2p+q and read off
// the triples covered in hub style. Fails when no valid matching results.
std::vector<int> ve_set_to_matching(const Gadget& gadget, const std::vector<int>& dom_set);

} // namespace vedom

#endif
