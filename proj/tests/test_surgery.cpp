#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oddmorph/surgery.hpp"
#include "oracles.hpp"
#include "surgery_helpers.hpp"

using namespace oddmorph;

namespace {

// 3K_2 with the bipartition colouring: a_i odd side 1, b_i odd side 2.
std::pair<MultiGraph, VertexColouring> three_matchings() {
    MultiGraph g = MultiGraph::with_vertices(6);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    g.add_edge(3, 6);
    VertexColouring f = oracle::make_colouring(
        2, {{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}});
    return {g, f};
}

} // namespace

TEST_CASE("merging two matching endpoints leaves a valid colouring") {
    auto [g, f] = three_matchings();
    REQUIRE(verify_oddomorphism(g, f));
    MergerResult r = merger(g, f, 1, 2, {});
    CHECK(r.graph.vertex_count() == 5);
    CHECK(r.graph.edge_count() == 3); // u'-4, u'-5, 3-6
    CHECK(r.graph.multiplicity(r.merged, 4) == 1);
    CHECK(r.graph.multiplicity(r.merged, 5) == 1);
    CHECK(verify_oddomorphism(r.graph, r.colouring));
    CHECK(classify_vertex(r.graph, r.colouring, r.merged) == ParityClass::Even);
}

TEST_CASE("a common neighbour off the connecting paths is cancelled") {
    // u1 and u2 share neighbour 3; the merged vertex must not see it.
    MultiGraph g = MultiGraph::with_vertices(4);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    VertexColouring f = oracle::make_colouring(3, {{1, 1}, {2, 1}, {3, 2}, {4, 3}});
    MergerResult r = merger(g, f, 1, 2, {});
    CHECK_FALSE(r.graph.adjacent(r.merged, 3));
    CHECK(r.graph.adjacent(r.merged, 4));
    CHECK(r.graph.edge_count() == 1);
}

TEST_CASE("merger consumes the supplied connecting paths") {
    // u1 - z - u2 with z coloured differently; the path is deleted wholesale.
    MultiGraph g = MultiGraph::with_vertices(4);
    EdgeId a = g.add_edge(1, 3);
    EdgeId b = g.add_edge(3, 2);
    g.add_edge(1, 4);
    VertexColouring f = oracle::make_colouring(3, {{1, 1}, {2, 1}, {3, 2}, {4, 3}});
    MergerResult r = merger(g, f, 1, 2, {EdgePath{1, {a, b}}});
    CHECK(r.graph.degree(3) == 0);
    CHECK(r.graph.adjacent(r.merged, 4));
    CHECK(r.graph.edge_count() == 1);
}

TEST_CASE("merger rejects bad inputs") {
    auto [g, f] = three_matchings();
    CHECK_THROWS_AS(merger(g, f, 1, 4, {}), GraphError); // different colours
    CHECK_THROWS_AS(merger(g, f, 1, 1, {}), GraphError);
    EdgePath not_connecting{1, {g.edges_between(1, 4)[0]}};
    CHECK_THROWS_AS(merger(g, f, 1, 2, {not_connecting}), GraphError);
}

TEST_CASE("two odd endpoints merge into an even vertex") {
    std::mt19937 rng(977);
    int observed = 0;
    for (int round = 0; round < 3000 && observed < 40; ++round) {
        std::uniform_int_distribution<int> size(3, 8);
        MultiGraph g = oracle::random_simple_graph(rng, size(rng), 0.5);
        for (int t = 2; t <= 4; ++t) {
            auto r = search_oddomorphism(g, t);
            if (!r.found())
                continue;
            const VertexColouring& f = *r.colouring;
            for (VertexId u1 : g.vertices()) {
                for (VertexId u2 : g.vertices()) {
                    if (u2 <= u1 || f.colour_of(u1) != f.colour_of(u2))
                        continue;
                    if (classify_vertex(g, f, u1) != ParityClass::Odd ||
                        classify_vertex(g, f, u2) != ParityClass::Odd)
                        continue;
                    int odd_before = 0;
                    for (VertexId v : f.colour_class(f.colour_of(u1)))
                        odd_before += classify_vertex(g, f, v) == ParityClass::Odd;
                    MergerResult m = merger(g, f, u1, u2, {});
                    REQUIRE(verify_oddomorphism(m.graph, m.colouring));
                    CHECK(classify_vertex(m.graph, m.colouring, m.merged) ==
                          ParityClass::Even);
                    int odd_after = 0;
                    for (VertexId v : m.colouring.colour_class(f.colour_of(u1)))
                        odd_after += classify_vertex(m.graph, m.colouring, v) ==
                                     ParityClass::Odd;
                    CHECK(odd_after == odd_before - 2);
                    ++observed;
                }
            }
        }
    }
    CHECK(observed >= 40);
}

TEST_CASE("merger preserves validity over random eligible instances") {
    std::mt19937 rng(991);
    int checked = 0;
    for (int round = 0; round < 400 && checked < 120; ++round) {
        std::uniform_int_distribution<int> size(3, 9);
        MultiGraph g = oracle::random_simple_graph(rng, size(rng), 0.55);
        for (int t = 2; t <= 4 && checked < 120; ++t) {
            auto r = search_oddomorphism(g, t);
            if (!r.found())
                continue;
            const VertexColouring& f = *r.colouring;
            for (VertexId u1 : g.vertices()) {
                for (VertexId u2 : g.vertices()) {
                    if (u2 <= u1 || f.colour_of(u1) != f.colour_of(u2))
                        continue;
                    auto paths = testing::greedy_connecting_paths(g, f, u1, u2);
                    // every prefix family, including the empty one
                    for (std::size_t take = 0; take <= paths.size(); ++take) {
                        std::vector<EdgePath> family(paths.begin(), paths.begin() + take);
                        MergerResult m = merger(g, f, u1, u2, family);
                        CHECK(verify_oddomorphism(m.graph, m.colouring));
                        ++checked;
                    }
                }
            }
        }
    }
    CHECK(checked >= 120);
}

TEST_CASE("merger entries replay forward exactly") {
    std::mt19937 rng(983);
    int replayed = 0;
    for (int round = 0; round < 400 && replayed < 50; ++round) {
        std::uniform_int_distribution<int> size(3, 8);
        MultiGraph g = oracle::random_simple_graph(rng, size(rng), 0.5);
        auto f = oracle::random_proper_colouring(rng, g, 3);
        if (!f)
            continue;
        for (VertexId u1 : g.vertices())
            for (VertexId u2 : g.vertices()) {
                if (u1 >= u2 || f->colour_of(u1) != f->colour_of(u2))
                    continue;
                auto pool = testing::greedy_connecting_paths(g, *f, u1, u2);
                OperationLog log;
                MergerResult m = merger(g, *f, u1, u2, pool, &log);
                CHECK(replay(g, log) == m.graph);
                ++replayed;
            }
    }
    CHECK(replayed >= 50);
}

TEST_CASE("deleting a 2-coloured cycle preserves validity") {
    SUBCASE("4-cycle out of a complete bipartite graph") {
        MultiGraph g = complete_bipartite(3, 3);
        VertexColouring f = oracle::make_colouring(
            2, {{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}});
        auto cycle = testing::any_bicoloured_cycle(g, f);
        REQUIRE(cycle);
        MultiGraph h = delete_bicoloured_cycle(g, f, *cycle);
        CHECK(h.edge_count() == g.edge_count() - cycle->length());
        CHECK(verify_oddomorphism(h, f));
    }
    SUBCASE("a parallel pair is a deletable 2-cycle") {
        MultiGraph g = MultiGraph::with_vertices(2);
        EdgeId a = g.add_edge(1, 2);
        EdgeId b = g.add_edge(1, 2);
        g.add_edge(1, 2);
        VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}});
        MultiGraph h = delete_bicoloured_cycle(g, f, EdgePath{1, {a, b}});
        CHECK(h.edge_count() == 1);
        CHECK(verify_oddomorphism(h, f));
    }
    SUBCASE("cycles through three colours are rejected") {
        MultiGraph g = complete_graph(3);
        VertexColouring f = identity_colouring(g);
        EdgePath tri{1, {1, 3, 2}};
        REQUIRE(check_cycle(g, tri));
        CHECK_THROWS_AS(delete_bicoloured_cycle(g, f, tri), GraphError);
    }
    SUBCASE("non-cycles are rejected") {
        MultiGraph g = path_graph(3);
        VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}, {3, 1}});
        CHECK_THROWS_AS(delete_bicoloured_cycle(g, f, EdgePath{1, {1, 2}}), GraphError);
    }
}

TEST_CASE("cycle deletion preserves validity over random eligible instances") {
    std::mt19937 rng(1009);
    int checked = 0;
    for (int round = 0; round < 6000 && checked < 100; ++round) {
        std::uniform_int_distribution<int> size(4, 9), side(2, 5);
        MultiGraph g = (round % 2 == 0)
                           ? oracle::random_simple_graph(rng, size(rng), 0.6)
                           : oracle::random_bipartite_graph(rng, side(rng), side(rng), 0.8);
        for (int t = 2; t <= 4 && checked < 100; ++t) {
            auto r = search_oddomorphism(g, t);
            if (!r.found())
                continue;
            auto cycle = testing::any_bicoloured_cycle(g, *r.colouring);
            if (!cycle)
                continue;
            MultiGraph h = delete_bicoloured_cycle(g, *r.colouring, *cycle);
            CHECK(verify_oddomorphism(h, *r.colouring));
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("splitting an odd path preserves validity on the alternating path") {
    MultiGraph g = path_graph(4);
    VertexColouring f = oracle::make_colouring(2, {{1, 1}, {2, 2}, {3, 1}, {4, 2}});
    REQUIRE(verify_oddomorphism(g, f));

    SUBCASE("the eligible full path splits to one edge") {
        EdgePath whole{1, {1, 2, 3}};
        MultiGraph h = split_odd_path(g, f, whole);
        CHECK(h.edge_count() == 1);
        CHECK(h.multiplicity(1, 4) == 1);
        CHECK(verify_oddomorphism(h, f)); // isolated middles turn even
        // restricted to the surviving component the colouring is still valid
        MultiGraph k2 = remove_isolated_vertices(h);
        VertexColouring restricted = oracle::make_colouring(2, {{1, 1}, {4, 2}});
        CHECK(verify_oddomorphism(k2, restricted));
    }
    SUBCASE("an even endpoint is rejected") {
        EdgePath to_even{1, {1, 2}}; // ends at vertex 3, which is even
        CHECK_THROWS_AS(split_odd_path(g, f, to_even), GraphError);
    }
    SUBCASE("same-coloured endpoints are rejected") {
        MultiGraph c6 = cycle_graph(6);
        VertexColouring f6 = oracle::make_colouring(
            3, {{1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 3}});
        EdgePath same{1, {1, 2}}; // 1 and 3 share colour 1
        CHECK_THROWS_AS(split_odd_path(c6, f6, same), GraphError);
    }
}

TEST_CASE("a length-2 split drops exactly one edge") {
    std::mt19937 rng(1013);
    int checked = 0;
    for (int round = 0; round < 6000 && checked < 60; ++round) {
        std::uniform_int_distribution<int> size(3, 9), side(2, 5);
        MultiGraph g = (round % 2 == 0)
                           ? oracle::random_simple_graph(rng, size(rng), 0.5)
                           : oracle::random_bipartite_graph(rng, side(rng), side(rng), 0.7);
        for (int t = 2; t <= 4 && checked < 60; ++t) {
            auto r = search_oddomorphism(g, t);
            if (!r.found())
                continue;
            auto p = testing::any_splittable_odd_path(g, *r.colouring);
            if (!p)
                continue;
            MultiGraph h = split_odd_path(g, *r.colouring, *p);
            CHECK(h.edge_count() == g.edge_count() - p->length() + 1);
            CHECK(verify_oddomorphism(h, *r.colouring));
            ++checked;
        }
    }
    CHECK(checked >= 60);
}
