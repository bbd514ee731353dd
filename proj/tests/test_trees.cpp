#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "vedom/blocks.hpp"
#include "vedom/trees.hpp"

using namespace vedom;

namespace {

long long count_trees(int n, bool dedup) {
    long long c = 0;
    enumerate_trees(n, dedup, [&](const Graph&) {
        ++c;
        return true;
    });
    return c;
}

} // namespace

TEST_CASE("labeled tree counts follow n^(n-2)") {
    CHECK(count_trees(2, false) == 1);
    CHECK(count_trees(3, false) == 3);
    CHECK(count_trees(4, false) == 16);
    CHECK(count_trees(5, false) == 125);
}

TEST_CASE("canonical class counts match the known sequence") {
    const long long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n)
        CHECK(static_cast<long long>(enumerate_canonical_trees(n).size()) == expected[n - 1]);
    CHECK(count_trees(3, true) == 1);
    CHECK(count_trees(4, true) == 2);
}

TEST_CASE("leaf-extension enumeration agrees with prufer dedup") {
    for (int n = 2; n <= 8; ++n) {
        std::set<std::string> via_prufer, via_ext;
        enumerate_trees(n, true, [&](const Graph& t) {
            via_prufer.insert(canonical_form(t).encoding);
            return true;
        });
        for (const Graph& t : enumerate_canonical_trees(n)) via_ext.insert(canonical_form(t).encoding);
        CHECK(via_prufer == via_ext);
    }
}

TEST_CASE("enumeration caps are enforced") {
    CHECK_THROWS_AS(count_trees(11, false), error);
    CHECK_THROWS_AS(enumerate_canonical_trees(17), error);
}

TEST_CASE("canonical form is isomorphism-invariant") {
    Graph p4 = make_path(4);
    Graph p4r = Graph::from_edges(4, {{3, 1}, {1, 0}, {0, 2}}); // relabeled path
    CHECK(canonical_form(p4) == canonical_form(p4r));
    CHECK(canonical_form(p4) != canonical_form(make_star(3)));
    CHECK(canonical_form(Graph::from_edges(1, {})).encoding ==
          canonical_form(Graph::from_edges(1, {})).encoding);
    CHECK_THROWS_AS(canonical_form(make_cycle(4)), error);
}

TEST_CASE("canonical form agrees with brute-force isomorphism on n <= 7") {
    for (int n = 3; n <= 7; ++n) {
        auto classes = enumerate_canonical_trees(n);
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i; j < classes.size(); ++j) {
                bool same_enc = canonical_form(classes[i]) == canonical_form(classes[j]);
                bool iso = vedom::test::brute_force_isomorphic(classes[i], classes[j]);
                CHECK(same_enc == iso);
            }
    }
    // random relabelings stay in their class
    Rng rng(7);
    for (const Graph& t : enumerate_canonical_trees(7)) {
        std::vector<int> perm(t.n);
        for (int i = 0; i < t.n; ++i) perm[i] = i;
        for (int i = t.n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : t.edges) edges.emplace_back(perm[u], perm[v]);
        CHECK(canonical_form(Graph::from_edges(t.n, edges)) == canonical_form(t));
    }
}

TEST_CASE("tree centers") {
    CHECK(tree_centers(make_path(5)) == std::vector<int>{2});
    CHECK(tree_centers(make_path(4)) == std::vector<int>{1, 2});
    CHECK(tree_centers(make_star(5)) == std::vector<int>{0});
}

TEST_CASE("prufer decode covers all labeled trees") {
    std::set<std::vector<std::pair<int, int>>> seen;
    enumerate_trees(5, false, [&](const Graph& t) {
        CHECK(is_tree(t));
        seen.insert(t.edges);
        return true;
    });
    CHECK(seen.size() == 125);
}

TEST_CASE("random_block_graph basics") {
    CHECK(random_block_graph(1, 5).n == 1);
    Graph a = random_block_graph(40, 99), b = random_block_graph(40, 99);
    CHECK(a.edges == b.edges); // determinism
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_block_graph(2 + static_cast<int>(seed % 40), seed);
        CHECK(g.n == 2 + static_cast<int>(seed % 40));
        CHECK(is_connected(g));
        CHECK(is_block_graph(g));
    }
    CHECK_THROWS_AS(random_block_graph(0, 1), error);
    CHECK_THROWS_AS(random_block_graph(5, 1, BlockGraphParams{3, 2}), error);
}
