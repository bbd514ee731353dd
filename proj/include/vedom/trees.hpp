#ifndef VEDOM_TREES_HPP
#define VEDOM_TREES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vedom/graph.hpp"

namespace vedom {

// Small deterministic RNG; avoids std distributions so a seed means the
// same stream on every standard library.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 2685821657736338717ULL;
    }
    // uniform in [0, k)
    int below(int k) { return static_cast<int>(next() % static_cast<uint64_t>(k)); }
    int in(int lo, int hi) { return lo + below(hi - lo + 1); } // inclusive
};

// Isomorphism-invariant encoding of a free tree (center-rooted AHU string).
struct TreeCanonicalForm {
    std::string encoding;
    bool operator==(const TreeCanonicalForm&) const = default;
    auto operator<=>(const TreeCanonicalForm&) const = default;
};

std::vector<int> tree_centers(const Graph& t);
TreeCanonicalForm canonical_form(const Graph& t);

Graph prufer_decode(const std::vector<int>& seq, int n);

struct EnumOptions {
    int labeled_cap = 10;    // n^(n-2) explodes quickly
    int canonical_cap = 16;
};

// Streams all labeled trees on n vertices by Prufer decoding; with dedup,
// exactly one representative per isomorphism class. Callback returns false
// to stop early.
void enumerate_trees(int n, bool dedup, const std::function<bool(const Graph&)>& fn,
                     const EnumOptions& opts = {});

// One representative per isomorphism class, generated by leaf extension
// from the classes on n-1 vertices. Equivalent to enumerate_trees with
// dedup but usable well past the labeled cap.
std::vector<Graph> enumerate_canonical_trees(int n, const EnumOptions& opts = {});

struct BlockGraphParams {
    int min_block_size = 2;
    int max_block_size = 5;
};

// Connected block graph on exactly n vertices: grow a block-cut skeleton by
// attaching cliques of sampled size at randomly chosen existing vertices.
Graph random_block_graph(int n, uint64_t seed, const BlockGraphParams& params = {});

} // namespace vedom

#endif
