#ifndef VEDOM_BLOCKS_HPP
#define VEDOM_BLOCKS_HPP

#include <vector>

#include "vedom/graph.hpp"

namespace vedom {

// Biconnected decomposition. Every edge lies in exactly one block; two
// distinct blocks share at most one vertex and that vertex is a cut vertex.
// Isolated vertices get singleton blocks so every vertex is covered.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks; // sorted vertex lists
    std::vector<char> is_cut;             // per vertex
    std::vector<int> cut_vertices;        // sorted
    std::vector<int> block_of_edge;       // indexed like Graph::edges
    std::vector<std::vector<int>> blocks_of_vertex;

    // End block: contains exactly one cut vertex (meaningful when the
    // component has at least two blocks).
    bool is_end_block(int b) const {
        int cuts = 0;
        for (int v : blocks[b]) cuts += is_cut[v] ? 1 : 0;
        return cuts <= 1;
    }
};

BlockDecomposition blocks_and_cut_vertices(const Graph& g);

// True iff every block induces a clique.
bool is_block_graph(const Graph& g);

} // namespace vedom

#endif
