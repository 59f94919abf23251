#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oddmorph/enumerate.hpp"
#include "oracles.hpp"

using namespace oddmorph;

TEST_CASE("canonical keys are permutation invariant") {
    std::mt19937 rng(401);
    for (int round = 0; round < 200; ++round) {
        MultiGraph g = oracle::random_multigraph(rng, 6, 8);
        // relabel by a random permutation
        std::vector<VertexId> perm(6);
        for (int i = 0; i < 6; ++i)
            perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        MultiGraph h = MultiGraph::with_vertices(6);
        for (const auto& [e, ends] : g.edges())
            h.add_edge(perm[ends.first - 1], perm[ends.second - 1]);
        CHECK(canonical_key(g) == canonical_key(h));
        CHECK(are_isomorphic(g, h));
    }
}

TEST_CASE("canonical keys distinguish multiplicity") {
    MultiGraph single = MultiGraph::with_vertices(2);
    single.add_edge(1, 2);
    MultiGraph twice = single;
    twice.add_edge(1, 2);
    CHECK(canonical_key(single) != canonical_key(twice));
    CHECK_FALSE(are_isomorphic(single, twice));
}

TEST_CASE("non-isomorphic pairs with equal degree sequences are separated") {
    // 2 triangles vs 6-cycle: both 2-regular on six vertices
    MultiGraph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK_FALSE(are_isomorphic(two_triangles, cycle_graph(6)));
    // the two trees on four vertices
    CHECK_FALSE(are_isomorphic(path_graph(4), complete_bipartite(1, 3)));
}

TEST_CASE("graph counts match the published sequences") {
    std::vector<int> per_n(7, 0);
    for (const MultiGraph& g : all_graphs_up_to(6))
        ++per_n[g.vertex_count()];
    CHECK(per_n[1] == 1);
    CHECK(per_n[2] == 2);
    CHECK(per_n[3] == 4);
    CHECK(per_n[4] == 11);
    CHECK(per_n[5] == 34);
    CHECK(per_n[6] == 156);

    std::vector<int> conn(9, 0);
    for (const MultiGraph& g : connected_graphs_up_to(8))
        ++conn[g.vertex_count()];
    CHECK(conn[1] == 1);
    CHECK(conn[2] == 1);
    CHECK(conn[3] == 2);
    CHECK(conn[4] == 6);
    CHECK(conn[5] == 21);
    CHECK(conn[6] == 112);
    CHECK(conn[7] == 853);
    CHECK(conn[8] == 11117);

    std::vector<int> trees(11, 0);
    for (const MultiGraph& g : trees_up_to(10))
        ++trees[g.vertex_count()];
    CHECK(trees[1] == 1);
    CHECK(trees[2] == 1);
    CHECK(trees[3] == 1);
    CHECK(trees[4] == 2);
    CHECK(trees[5] == 3);
    CHECK(trees[6] == 6);
    CHECK(trees[7] == 11);
    CHECK(trees[8] == 23);
    CHECK(trees[9] == 47);
    CHECK(trees[10] == 106);
}

TEST_CASE("every enumerated connected graph is connected and distinct") {
    std::set<CanonicalKey> seen;
    for (const MultiGraph& g : connected_graphs_up_to(6)) {
        CHECK(is_connected(g));
        CHECK(seen.insert(canonical_key(g)).second);
    }
}

TEST_CASE("multigraph enumeration by edge count matches the known counts") {
    std::vector<int> per_m(7, 0);
    for (const MultiGraph& g : oracle::multigraphs_up_to_edges(6))
        ++per_m[g.edge_count()];
    CHECK(per_m[1] == 1);
    CHECK(per_m[2] == 3);
    CHECK(per_m[3] == 8);
    CHECK(per_m[4] == 23);
    CHECK(per_m[5] == 66);
    CHECK(per_m[6] == 212);
}
