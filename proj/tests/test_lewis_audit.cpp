#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "vedom/lewis_audit.hpp"
#include "vedom/oracles.hpp"
#include "vedom/trees.hpp"

using namespace vedom;

TEST_CASE("subdivide doubles the edges into length-2 paths") {
    auto s2 = subdivide(make_path(2));
    CHECK(s2.tree.n == 3);
    CHECK(s2.original == std::vector<char>{1, 1, 0});
    CHECK(s2.tree.has_edge(0, 2));
    CHECK(s2.tree.has_edge(1, 2));

    auto s4 = subdivide(make_path(4));
    CHECK(s4.tree.n == 7);
    CHECK(is_tree(s4.tree));
    for (int v = 0; v < 4; ++v) CHECK(s4.original[v]);
    for (int v = 4; v < 7; ++v) CHECK_FALSE(s4.original[v]);
    CHECK(s4.sub_of.size() == 3);

    auto star = subdivide(make_star(3));
    CHECK(star.tree.n == 7);
    for (int leaf : {1, 2, 3}) CHECK(bfs_distances(star.tree, 0)[leaf] == 2);

    CHECK_THROWS_AS(subdivide(make_cycle(4)), error);
}

TEST_CASE("lewis transform values on small paths") {
    CHECK(lewis_value(make_path(2)) == 1);
    CHECK(lewis_value(make_path(3)) == 1);
    // the claimed transform already overshoots on P4: the subdivided path has
    // no original vertex within distance 3 of everything
    CHECK(lewis_value(make_path(4)) == 2);
    CHECK(lewis_value(make_path(7)) == 3);
}

TEST_CASE("corrected transform matches gamma_ve exactly") {
    CHECK(corrected_value(make_path(2)) == 1);
    CHECK(corrected_value(make_path(7)) == 2);
    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : enumerate_canonical_trees(n))
            CHECK(corrected_value(t) == gamma_ve_bruteforce(t).objective);
}

TEST_CASE("lewis value never undershoots the corrected value") {
    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : enumerate_canonical_trees(n))
            CHECK(lewis_value(t) >= corrected_value(t));
}

TEST_CASE("audit reports") {
    auto p2 = audit(make_path(2));
    CHECK(p2.gamma_ve == 1);
    CHECK(p2.lewis == 1);
    CHECK(p2.corrected == 1);
    CHECK_FALSE(p2.mismatch);

    auto p4 = audit(make_path(4));
    CHECK(p4.gamma_ve == 1);
    CHECK(p4.lewis == 2);
    CHECK(p4.corrected == 1);
    CHECK(p4.mismatch);

    auto p7 = audit(make_path(7));
    CHECK(p7.gamma_ve == 2);
    CHECK(p7.lewis == 3);
    CHECK(p7.mismatch);

    auto j = p4.to_json();
    CHECK(j.find("\"mismatch\":true") != std::string::npos);
}

TEST_CASE("the smallest counterexample is the four-vertex path") {
    CHECK(search_counterexamples(3).empty());
    auto found = search_counterexamples(4);
    REQUIRE(found.size() == 1);
    CHECK(found.front().tree.n == 4);
    CHECK(found.front().canonical == canonical_form(make_path(4)).encoding);
    CHECK(found.front().gamma_ve == 1);
    CHECK(found.front().lewis == 2);
}

TEST_CASE("search results re-audit identically and are oracle-verified") {
    auto found = search_counterexamples(7);
    CHECK(!found.empty());
    for (const auto& rep : found) {
        auto again = audit(rep.tree);
        CHECK(again.gamma_ve == rep.gamma_ve);
        CHECK(again.lewis == rep.lewis);
        CHECK(again.corrected == rep.corrected);
        CHECK(rep.gamma_ve == gamma_ve_bruteforce(rep.tree).objective);
        CHECK(rep.mismatch);
    }
}

TEST_CASE("trees with gamma_ve two but lewis at least three exist by n=8") {
    bool strong = false;
    for (const auto& rep : search_counterexamples(8))
        if (rep.gamma_ve == 2 && rep.lewis >= 3) strong = true;
    CHECK(strong);
}

TEST_CASE("audit cap errors") {
    CHECK_THROWS_AS(lewis_value(make_path(21)), error);
    AuditOptions roomy;
    roomy.oracle.vertex_cap = 25;
    CHECK(lewis_value(make_path(21), roomy) > 0);
}
