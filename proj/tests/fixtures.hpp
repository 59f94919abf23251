#pragma once

// Hand-built instances shared between the unit suites and the acceptance
// runner.

#include <map>
#include <utility>

#include "oddmorph/colouring.hpp"
#include "oddmorph/multigraph.hpp"

namespace oddmorph::testing {

struct MergerFixture {
    MultiGraph graph;
    VertexColouring colouring;
};

/// An 84-colour instance engineered so that K_3 extraction cannot use the
/// minimum-degree case at the top level.
///
/// Colour 1 holds x=1, y=2, s=3 (and with `deep`, also p=4, q=5). Colours
/// 2..4 hold a worker w_j plus a degree-2 connector z_j adjacent to exactly
/// x and y; with `deep`, colours 5..7 get connectors adjacent to exactly p
/// and q. Every remaining colour holds a single worker adjacent to all
/// colour-1 vertices except the connector-served ones; the workers form a
/// clique, and s is adjacent to every worker.
///
/// Splitting the colour-pair forests turns each connector path and each
/// worker fork into a parallel edge between two colour-1 vertices, so y
/// (and later q) ends up with almost all of its multi-degree concentrated
/// on one partner. That forces the bundle-merging branch: x and y merge
/// over the three z_j paths, the merged vertex goes isolated, and the
/// recursion either sees a clean K_84 on s and the workers (shallow) or
/// repeats the story once more with p and q (deep).
inline MergerFixture build_merger_fixture(bool deep = false) {
    constexpr int colours = 84;
    MergerFixture fx;
    MultiGraph& g = fx.graph;
    VertexColouring& f = fx.colouring;
    f.colour_count = colours;

    const VertexId x = 1, y = 2, s = 3;
    std::vector<VertexId> hubs{x, y, s};
    VertexId p = 0, q = 0;
    if (deep) {
        p = 4;
        q = 5;
        hubs.push_back(p);
        hubs.push_back(q);
    }
    for (VertexId v : hubs) {
        g.add_vertex(v);
        f.assignment[v] = 1;
    }

    std::map<int, VertexId> worker;
    for (int j = 2; j <= colours; ++j) {
        VertexId w = g.add_fresh_vertex();
        worker[j] = w;
        f.assignment[w] = j;
    }
    for (int j = 2; j <= colours; ++j)
        for (int k = j + 1; k <= colours; ++k)
            g.add_edge(worker[j], worker[k]);

    auto served_by_xy = [&](int j) { return j >= 2 && j <= 4; };
    auto served_by_pq = [&](int j) { return deep && j >= 5 && j <= 7; };

    for (int j = 2; j <= colours; ++j) {
        if (served_by_xy(j)) {
            VertexId z = g.add_fresh_vertex();
            f.assignment[z] = j;
            g.add_edge(x, z);
            g.add_edge(y, z);
        } else {
            g.add_edge(x, worker[j]);
            g.add_edge(y, worker[j]);
        }
        g.add_edge(s, worker[j]);
        if (deep) {
            if (served_by_pq(j)) {
                VertexId z = g.add_fresh_vertex();
                f.assignment[z] = j;
                g.add_edge(p, z);
                g.add_edge(q, z);
            } else {
                g.add_edge(p, worker[j]);
                g.add_edge(q, worker[j]);
            }
        }
    }
    return fx;
}

} // namespace oddmorph::testing
