#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oddmorph/colouring.hpp"
#include "oddmorph/enumerate.hpp"
#include "oracles.hpp"

using namespace oddmorph;

TEST_CASE("complete graphs classify every vertex odd under the identity colouring") {
    for (int t = 1; t <= 8; ++t) {
        MultiGraph g = complete_graph(t);
        VertexColouring f = identity_colouring(g);
        for (VertexId v : g.vertices())
            CHECK(classify_vertex(g, f, v) == ParityClass::Odd);
        CHECK(verify_oddomorphism(g, f));
    }
}

TEST_CASE("an even cycle under its proper 2-colouring is all even") {
    MultiGraph g = cycle_graph(6);
    VertexColouring f = oracle::make_colouring(
        2, {{1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 2}});
    for (VertexId v : g.vertices())
        CHECK(classify_vertex(g, f, v) == ParityClass::Even);
    Verdict v = verify_oddomorphism(g, f);
    CHECK_FALSE(v);
    CHECK(v.code == "even-odd-count");
}

TEST_CASE("mixed parities classify as neither") {
    // K_4 minus the edge {3,4}, colours (1,2,3,3): vertex 1 sees one vertex
    // of colour 2 and two of colour 3.
    MultiGraph g = complete_graph(4);
    for (EdgeId e : g.edges_between(3, 4))
        g.remove_edge(e);
    VertexColouring f = oracle::make_colouring(3, {{1, 1}, {2, 2}, {3, 3}, {4, 3}});
    CHECK(classify_vertex(g, f, 1) == ParityClass::Neither);
    CHECK(oracle::literal_parity(g, f, 1) == ParityClass::Neither);
    Verdict v = verify_oddomorphism(g, f);
    CHECK_FALSE(v);
    CHECK(v.code == "neither-vertex");
}

TEST_CASE("multiplicity classification matches the literal one on simple graphs") {
    std::mt19937 rng(17);
    int compared = 0;
    for (int round = 0; round < 400; ++round) {
        MultiGraph g = oracle::random_simple_graph(rng, 7, 0.45);
        auto f = oracle::random_proper_colouring(rng, g, 4);
        if (!f)
            continue;
        for (VertexId v : g.vertices()) {
            CHECK(classify_vertex(g, *f, v) == oracle::literal_parity(g, *f, v));
            ++compared;
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("the alternating path is a 2-oddomorphism") {
    MultiGraph g = path_graph(4);
    VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}, {3, 1}, {4, 2}});
    CHECK(classify_vertex(g, f, 1) == ParityClass::Odd);
    CHECK(classify_vertex(g, f, 2) == ParityClass::Even);
    CHECK(classify_vertex(g, f, 3) == ParityClass::Even);
    CHECK(classify_vertex(g, f, 4) == ParityClass::Odd);
    CHECK(verify_oddomorphism(g, f));
}

TEST_CASE("complete bipartite with the bipartition colouring verifies") {
    MultiGraph g = complete_bipartite(3, 3);
    VertexColouring f = oracle::make_colouring(
        2, {{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}});
    CHECK(verify_oddomorphism(g, f));
}

TEST_CASE("verification failures carry structured reasons") {
    MultiGraph g = complete_graph(3);
    SUBCASE("improper") {
        VertexColouring f = oracle::make_colouring(3, {{1, 1}, {2, 1}, {3, 2}});
        Verdict v = verify_oddomorphism(g, f);
        CHECK_FALSE(v);
        CHECK(v.code == "improper-edge");
    }
    SUBCASE("missing vertex") {
        VertexColouring f = oracle::make_colouring(3, {{1, 1}, {2, 2}});
        CHECK(verify_oddomorphism(g, f).code == "not-total");
    }
    SUBCASE("zero odd vertices count as even, so empty classes fail") {
        MultiGraph lone = MultiGraph::with_vertices(1);
        VertexColouring f = oracle::make_colouring(2, {{1, 1}});
        CHECK(classify_vertex(lone, f, 1) == ParityClass::Even);
        Verdict v = verify_oddomorphism(lone, f);
        CHECK_FALSE(v);
        CHECK(v.code == "even-odd-count");
    }
    SUBCASE("a declared colour no vertex can reach makes everyone neither") {
        VertexColouring f = oracle::make_colouring(4, {{1, 1}, {2, 2}, {3, 3}});
        Verdict v = verify_oddomorphism(g, f);
        CHECK_FALSE(v);
        CHECK(v.code == "neither-vertex");
    }
}

TEST_CASE("classification refuses improper incident colours and unknown vertices") {
    MultiGraph g = path_graph(2);
    VertexColouring mono = oracle::make_colouring(2, {{1, 1}, {2, 1}});
    CHECK_THROWS_AS(classify_vertex(g, mono, 1), GraphError);
    VertexColouring ok = oracle::make_colouring(2, {{1, 1}, {2, 2}});
    CHECK_THROWS_AS(classify_vertex(g, ok, 9), GraphError);
}

TEST_CASE("parity counts use edge multiplicity on multigraphs") {
    MultiGraph g = MultiGraph::with_vertices(2);
    g.add_edge(1, 2);
    g.add_edge(1, 2);
    VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}});
    CHECK(classify_vertex(g, f, 1) == ParityClass::Even);
    g.add_edge(1, 2);
    CHECK(classify_vertex(g, f, 1) == ParityClass::Odd);
}

TEST_CASE("search finds the expected colourings on the named graphs") {
    SUBCASE("complete graph at full t") {
        auto r = search_oddomorphism(complete_graph(4), 4);
        REQUIRE(r.found());
        CHECK(verify_oddomorphism(complete_graph(4), *r.colouring));
    }
    SUBCASE("even cycle has no 2-oddomorphism") {
        auto r = search_oddomorphism(cycle_graph(6), 2);
        CHECK(r.status == SearchStatus::Exhausted);
    }
    SUBCASE("path on four vertices") {
        auto r = search_oddomorphism(path_graph(4), 2);
        REQUIRE(r.found());
        CHECK(r.colouring->assignment == std::map<VertexId, int>{{1, 1}, {2, 2}, {3, 1}, {4, 2}});
    }
    SUBCASE("budget exhaustion is distinct from none") {
        auto r = search_oddomorphism(complete_graph(6), 6, 3);
        CHECK(r.status == SearchStatus::BudgetExceeded);
    }
    SUBCASE("multigraphs are rejected") {
        MultiGraph g = MultiGraph::with_vertices(2);
        g.add_edge(1, 2);
        g.add_edge(1, 2);
        CHECK_THROWS_AS(search_oddomorphism(g, 2), GraphError);
    }
}

TEST_CASE("search agrees with exhaustive enumeration on every small graph") {
    for (const MultiGraph& g : all_graphs_up_to(5)) {
        for (int t = 1; t <= 3; ++t) {
            bool any = !oracle::enumerate_oddomorphisms(g, t).empty();
            auto r = search_oddomorphism(g, t);
            REQUIRE(r.status != SearchStatus::BudgetExceeded);
            CHECK(r.found() == any);
        }
    }
}

TEST_CASE("search agrees with exhaustive enumeration on small graphs") {
    std::mt19937 rng(29);
    for (int round = 0; round < 60; ++round) {
        std::uniform_int_distribution<int> size(1, 6);
        int n = size(rng);
        MultiGraph g = oracle::random_simple_graph(rng, n, 0.5);
        for (int t = 1; t <= 3; ++t) {
            bool any = !oracle::enumerate_oddomorphisms(g, t).empty();
            auto r = search_oddomorphism(g, t);
            REQUIRE(r.status != SearchStatus::BudgetExceeded);
            CHECK(r.found() == any);
            if (r.found())
                CHECK(verify_oddomorphism(g, *r.colouring));
        }
    }
}

TEST_CASE("odd vertices of a valid colouring have degree at least t-1") {
    std::mt19937 rng(31);
    int verified = 0;
    for (int round = 0; round < 200; ++round) {
        std::uniform_int_distribution<int> size(2, 7);
        MultiGraph g = oracle::random_simple_graph(rng, size(rng), 0.55);
        for (int t = 2; t <= 4; ++t) {
            auto r = search_oddomorphism(g, t);
            if (!r.found())
                continue;
            ++verified;
            for (VertexId v : g.vertices())
                if (classify_vertex(g, *r.colouring, v) == ParityClass::Odd)
                    CHECK(g.degree(v) >= t - 1);
        }
    }
    CHECK(verified > 30);
}

TEST_CASE("bipartite_subgraph keeps exactly the cross edges with their ids") {
    SUBCASE("triangle with three colours") {
        MultiGraph g = complete_graph(3);
        VertexColouring f = identity_colouring(g);
        MultiGraph sub = bipartite_subgraph(g, f, 1, 2);
        CHECK(sub.edge_count() == 1);
        CHECK(sub.vertex_count() == 2);
        CHECK(sub.has_edge(g.edges_between(1, 2)[0]));
    }
    SUBCASE("properly coloured even cycle is untouched") {
        MultiGraph g = cycle_graph(6);
        VertexColouring f = oracle::make_colouring(
            2, {{1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 2}});
        MultiGraph sub = bipartite_subgraph(g, f, 1, 2);
        CHECK(sub.edge_count() == 6);
        CHECK(sub.vertex_count() == 6);
    }
    SUBCASE("two colour classes of a clique") {
        MultiGraph g = complete_graph(4);
        VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 1}, {3, 2}, {4, 2}});
        MultiGraph sub = bipartite_subgraph(g, f, 1, 2);
        CHECK(sub.edge_count() == 4); // the 4-cycle across the bipartition
        CHECK(sub.multiplicity(1, 2) == 0);
        CHECK(sub.multiplicity(3, 4) == 0);
    }
    SUBCASE("same colour twice is an error") {
        MultiGraph g = complete_graph(3);
        CHECK_THROWS_AS(bipartite_subgraph(g, identity_colouring(g), 2, 2), GraphError);
    }
}
