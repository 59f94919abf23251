#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oddmorph/extract.hpp"
#include "oracles.hpp"
#include "surgery_helpers.hpp"

using namespace oddmorph;

TEST_CASE("colour demand formula") {
    CHECK(required_colours(1) == 0);
    CHECK(required_colours(2) == 21);
    CHECK(required_colours(3) == 84);
    CHECK(required_colours(4) == 210);
}

TEST_CASE("normalize is the identity on an already clean instance") {
    MultiGraph g = complete_graph(5);
    VertexColouring f = identity_colouring(g);
    NormalizeStats stats;
    PipelineState out = normalize({g, f, {}}, &stats);
    CHECK(out.graph == g);
    CHECK(stats.cycles_deleted == 0);
    CHECK(stats.paths_split == 0);
    CHECK(out.log.empty());
}

TEST_CASE("normalize clears cycles and splittable paths") {
    MultiGraph g = complete_bipartite(3, 3);
    VertexColouring f = oracle::make_colouring(
        2, {{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}});
    NormalizeStats stats;
    PipelineState out = normalize({g, f, {}}, &stats);
    CHECK(stats.cycles_deleted > 0);
    CHECK(verify_oddomorphism(out.graph, f));
    CHECK_FALSE(testing::any_bicoloured_cycle(out.graph, f).has_value());
    CHECK_FALSE(testing::any_splittable_odd_path(out.graph, f).has_value());
    CHECK(replay(g, out.log) == out.graph);
    // parity per vertex is untouched: everyone started odd and stays odd
    for (VertexId v : out.graph.vertices())
        CHECK(classify_vertex(out.graph, f, v) == ParityClass::Odd);
}

TEST_CASE("normalize splits the alternating path down to an edge") {
    MultiGraph g = path_graph(4);
    VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}, {3, 1}, {4, 2}});
    NormalizeStats stats;
    PipelineState out = normalize({g, f, {}}, &stats);
    CHECK(stats.paths_split == 1);
    CHECK(out.graph.edge_count() == 1);
    CHECK(out.graph.multiplicity(1, 4) == 1);
}

TEST_CASE("normalize reaches the same clean state under random orders") {
    std::mt19937 rng(709);
    int shuffled_runs = 0;
    for (int round = 0; round < 2000 && shuffled_runs < 25; ++round) {
        std::uniform_int_distribution<int> size(4, 8), side(2, 4);
        MultiGraph g = (round % 2 == 0)
                           ? oracle::random_simple_graph(rng, size(rng), 0.6)
                           : oracle::random_bipartite_graph(rng, side(rng), side(rng), 0.8);
        for (int t = 2; t <= 4; ++t) {
            auto r = search_oddomorphism(g, t);
            if (!r.found())
                continue;
            const VertexColouring& f = *r.colouring;
            if (!testing::any_bicoloured_cycle(g, f) && !testing::any_splittable_odd_path(g, f))
                continue;
            for (unsigned seed : {1u, 2u, 3u}) {
                PipelineState out = normalize({g, f, {}}, nullptr, seed);
                CHECK(verify_oddomorphism(out.graph, f));
                CHECK_FALSE(testing::any_bicoloured_cycle(out.graph, f).has_value());
                CHECK_FALSE(testing::any_splittable_odd_path(out.graph, f).has_value());
            }
            ++shuffled_runs;
        }
    }
    CHECK(shuffled_runs >= 25);
}

TEST_CASE("normalize treats a parallel bundle as deletable 2-cycles") {
    MultiGraph g = MultiGraph::with_vertices(2);
    g.add_edge(1, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 2);
    VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}});
    REQUIRE(verify_oddomorphism(g, f)); // triple edge: both endpoints odd
    NormalizeStats stats;
    PipelineState out = normalize({g, f, {}}, &stats);
    CHECK(stats.cycles_deleted == 1);
    CHECK(out.graph.edge_count() == 1);
    CHECK(verify_oddomorphism(out.graph, f));
}

TEST_CASE("trivial extraction targets") {
    SUBCASE("a single branch vertex") {
        MultiGraph g = path_graph(4);
        VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}, {3, 1}, {4, 2}});
        REQUIRE(verify_oddomorphism(g, f));
        ImmersionWitness w = extract_clique_immersion(g, f, 1);
        CHECK(verify_immersion(w));
        CHECK(w.pattern.vertex_count() == 1);
    }
    SUBCASE("an edge out of a 21-clique") {
        MultiGraph g = complete_graph(21);
        ImmersionWitness w = extract_clique_immersion(g, identity_colouring(g), 2);
        CHECK(verify_immersion(w));
        CHECK(w.pattern.vertex_count() == 2);
        CHECK(w.host == g);
    }
    SUBCASE("colour demand is enforced") {
        MultiGraph g = complete_graph(20);
        CHECK_THROWS_AS(extract_clique_immersion(g, identity_colouring(g), 2), GraphError);
    }
    SUBCASE("parallel edges are rejected at the entrance") {
        MultiGraph g = MultiGraph::with_vertices(2);
        g.add_edge(1, 2);
        g.add_edge(1, 2);
        g.add_edge(1, 2);
        VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}});
        REQUIRE(verify_oddomorphism(g, f));
        CHECK_THROWS_AS(extract_clique_immersion(g, f, 1), GraphError);
    }
    SUBCASE("colouring must be valid") {
        MultiGraph g = cycle_graph(6);
        VertexColouring f = oracle::make_colouring(
            2, {{1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 2}});
        CHECK_THROWS_AS(extract_clique_immersion(g, f, 1), GraphError);
    }
}

TEST_CASE("the 84-clique drives the minimum-degree case") {
    MultiGraph g = complete_graph(84);
    ExtractStats stats;
    ImmersionWitness w = extract_clique_immersion(g, identity_colouring(g), 3, 2'000'000'000LL,
                                                  &stats);
    CHECK(verify_immersion(w));
    CHECK(w.host == g);
    CHECK(w.pattern.vertex_count() == 3);
    CHECK(stats.min_degree_base_case);
    CHECK(stats.base_case_depth == 0);
    CHECK(stats.mergers == 0);
    CHECK(stats.recursion_depth == 0);
}

TEST_CASE("the engineered fixture forces a merger and still lifts soundly") {
    testing::MergerFixture fx = testing::build_merger_fixture();
    REQUIRE(fx.graph.vertex_count() == 89);
    REQUIRE(verify_oddomorphism(fx.graph, fx.colouring));

    ExtractStats stats;
    ImmersionWitness w =
        extract_clique_immersion(fx.graph, fx.colouring, 3, 2'000'000'000LL, &stats);
    CHECK(verify_immersion(w));
    CHECK(w.host == fx.graph);
    CHECK(stats.mergers >= 1);
    CHECK(stats.recursion_depth >= 1);
    CHECK(stats.min_degree_base_case);
    CHECK(stats.base_case_depth >= 1);
    CHECK(stats.split_phase_paths > 0);
}

TEST_CASE("asymmetric bundle endpoints leave the merged vertex with live edges") {
    // Rewire colour 5 of the fixture so y sees three colour-5 vertices and x
    // sees one, with degree-2 connectors keeping everyone classifiable. The
    // normalize phase must first split the long odd paths this creates, the
    // merged vertex inherits the neighbourhood difference {w_5, b}, and the
    // recursion has to re-normalize it away before reaching the clean clique.
    testing::MergerFixture fx = testing::build_merger_fixture();
    MultiGraph& g = fx.graph;
    const VertexId x = 1, y = 2, s = 3;
    const VertexId w5 = 7; // worker of colour 5
    for (EdgeId e : g.edges_between(x, w5))
        g.remove_edge(e);
    for (EdgeId e : g.edges_between(s, w5))
        g.remove_edge(e);
    VertexId a = g.add_fresh_vertex();
    VertexId b = g.add_fresh_vertex();
    fx.colouring.assignment[a] = 5;
    fx.colouring.assignment[b] = 5;
    g.add_edge(y, a);
    g.add_edge(x, a);
    g.add_edge(y, b);
    g.add_edge(s, b);
    REQUIRE(verify_oddomorphism(g, fx.colouring));

    NormalizeStats nstats;
    PipelineState cleaned = normalize({g, fx.colouring, {}}, &nstats);
    CHECK(nstats.paths_split >= 1); // the x..w_5 odd path collapses first

    ExtractStats stats;
    ImmersionWitness w =
        extract_clique_immersion(g, fx.colouring, 3, 2'000'000'000LL, &stats);
    CHECK(verify_immersion(w));
    CHECK(w.host == g);
    CHECK(stats.mergers >= 1);
    CHECK(stats.recursion_depth >= 1);
    CHECK(stats.normalize_path_splits >= 2); // once at each level
    CHECK(stats.min_degree_base_case);
}

TEST_CASE("the deep fixture recurses through two mergers") {
    testing::MergerFixture fx = testing::build_merger_fixture(true);
    REQUIRE(verify_oddomorphism(fx.graph, fx.colouring));

    ExtractStats stats;
    ImmersionWitness w =
        extract_clique_immersion(fx.graph, fx.colouring, 3, 2'000'000'000LL, &stats);
    CHECK(verify_immersion(w));
    CHECK(w.host == fx.graph);
    CHECK(stats.mergers == 2);
    CHECK(stats.recursion_depth == 2);
    CHECK(stats.min_degree_base_case);
    CHECK(stats.base_case_depth == 2);
}
