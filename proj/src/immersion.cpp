#include "oddmorph/immersion.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oddmorph {

Verdict verify_immersion(const ImmersionWitness& w) {
    std::set<VertexId> images;
    for (const auto& [pv, hv] : w.branch) {
        if (!w.pattern.has_vertex(pv))
            return Verdict::fail("branch-vertex-missing",
                                 "branch maps unknown pattern vertex " + std::to_string(pv));
        if (!w.host.has_vertex(hv))
            return Verdict::fail("branch-vertex-missing",
                                 "branch image " + std::to_string(hv) + " not in host");
        if (!images.insert(hv).second)
            return Verdict::fail("branch-not-injective",
                                 "two pattern vertices share image " + std::to_string(hv))
                .with("host_vertex", std::to_string(hv));
    }
    for (VertexId pv : w.pattern.vertices())
        if (!w.branch.count(pv))
            return Verdict::fail("branch-vertex-missing",
                                 "pattern vertex " + std::to_string(pv) + " has no image");

    std::set<EdgeId> used;
    for (const auto& [pe, ends] : w.pattern.edges()) {
        auto it = w.routes.find(pe);
        if (it == w.routes.end())
            return Verdict::fail("route-missing",
                                 "pattern edge " + std::to_string(pe) + " has no route")
                .with("pattern_edge", std::to_string(pe));
        const EdgePath& route = it->second;
        if (Verdict v = check_path(w.host, route); !v)
            return Verdict::fail("route-invalid",
                                 "route for pattern edge " + std::to_string(pe) + ": " + v.message)
                .with("pattern_edge", std::to_string(pe));
        VertexId a = w.branch.at(ends.first), b = w.branch.at(ends.second);
        VertexId s = route.start, t = path_end(w.host, route);
        if (!((s == a && t == b) || (s == b && t == a)))
            return Verdict::fail("route-endpoints",
                                 "route for pattern edge " + std::to_string(pe) +
                                     " joins the wrong branch vertices")
                .with("pattern_edge", std::to_string(pe));
        for (EdgeId e : route.edges)
            if (!used.insert(e).second)
                return Verdict::fail("edge-reuse",
                                     "host edge " + std::to_string(e) + " used by two routes")
                    .with("host_edge", std::to_string(e));
    }
    for (const auto& [pe, route] : w.routes)
        if (!w.pattern.has_edge(pe))
            return Verdict::fail("route-missing",
                                 "route keyed by unknown pattern edge " + std::to_string(pe));
    return Verdict::pass();
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

namespace {

struct RouteSearch {
    const MultiGraph& host;
    long long budget = 0;
    long long nodes = 0;
    bool out_of_budget = false;
    std::set<EdgeId> used = {};

    bool spend() {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // Enumerates simple a->b paths of exactly `len` edges avoiding used ids,
    // ascending edge-id order, calling sink for each until it returns true.
    bool paths_of_length(VertexId a, VertexId b, int len, EdgePath& partial,
                         std::set<VertexId>& seen,
                         const std::function<bool(const EdgePath&)>& sink) {
        if (!spend())
            return false;
        VertexId at = a;
        for (EdgeId e : partial.edges)
            at = host.other_endpoint(e, at);
        if (len == 0)
            return at == b && sink(partial);
        for (EdgeId e : host.incident_edges(at)) {
            if (used.count(e))
                continue;
            if (std::find(partial.edges.begin(), partial.edges.end(), e) != partial.edges.end())
                continue;
            VertexId next = host.other_endpoint(e, at);
            if (seen.count(next))
                continue;
            if (len > 1 && next == b)
                continue; // b may only appear as the final vertex
            partial.edges.push_back(e);
            seen.insert(next);
            bool done = paths_of_length(a, b, len - 1, partial, seen, sink);
            seen.erase(next);
            partial.edges.pop_back();
            if (done || out_of_budget)
                return done;
        }
        return false;
    }

    // Route pattern edges one at a time, shortest candidate paths first.
    bool pack(const std::vector<std::pair<VertexId, VertexId>>& demands, std::size_t idx,
              std::vector<EdgePath>& routes) {
        if (idx == demands.size())
            return true;
        auto [a, b] = demands[idx];
        int max_len = host.vertex_count() - 1;
        for (int len = 1; len <= max_len; ++len) {
            EdgePath partial;
            partial.start = a;
            std::set<VertexId> seen{a};
            bool done = paths_of_length(a, b, len, partial, seen, [&](const EdgePath& p) {
                for (EdgeId e : p.edges)
                    used.insert(e);
                routes.push_back(p);
                if (pack(demands, idx + 1, routes))
                    return true;
                routes.pop_back();
                for (EdgeId e : p.edges)
                    used.erase(e);
                return false;
            });
            if (done)
                return true;
            if (out_of_budget)
                return false;
        }
        return false;
    }
};

bool is_complete_simple(const MultiGraph& g) {
    if (!g.is_simple())
        return false;
    for (VertexId u : g.vertices())
        for (VertexId v : g.vertices())
            if (u < v && !g.adjacent(u, v))
                return false;
    return true;
}

std::optional<ImmersionWitness> witness_from_branch(const MultiGraph& host,
                                                    const MultiGraph& pattern,
                                                    const std::map<VertexId, VertexId>& branch,
                                                    RouteSearch& rs) {
    // Harder demands first: pattern edges at high-degree branch vertices.
    std::vector<std::pair<int, EdgeId>> ranked;
    for (const auto& [pe, ends] : pattern.edges())
        ranked.push_back({-(pattern.degree(ends.first) + pattern.degree(ends.second)), pe});
    std::sort(ranked.begin(), ranked.end());

    std::vector<std::pair<VertexId, VertexId>> demands;
    std::vector<EdgeId> pattern_edges;
    for (auto [score, pe] : ranked) {
        auto ends = pattern.endpoints(pe);
        demands.push_back({branch.at(ends.first), branch.at(ends.second)});
        pattern_edges.push_back(pe);
    }
    std::vector<EdgePath> routes;
    rs.used.clear();
    if (!rs.pack(demands, 0, routes))
        return std::nullopt;
    ImmersionWitness w;
    w.pattern = pattern;
    w.host = host;
    w.branch = branch;
    for (std::size_t i = 0; i < pattern_edges.size(); ++i)
        w.routes[pattern_edges[i]] = routes[i];
    return w;
}

// A K_t subgraph yields a witness with single-edge routes without search.
std::optional<ImmersionWitness> greedy_clique_witness(const MultiGraph& host,
                                                      const MultiGraph& pattern) {
    int t = pattern.vertex_count();
    std::vector<VertexId> clique;
    for (VertexId v : host.vertices()) {
        bool ok = true;
        for (VertexId c : clique)
            if (!host.adjacent(c, v)) {
                ok = false;
                break;
            }
        if (ok) {
            clique.push_back(v);
            if (static_cast<int>(clique.size()) == t)
                break;
        }
    }
    if (static_cast<int>(clique.size()) < t)
        return std::nullopt;
    ImmersionWitness w;
    w.pattern = pattern;
    w.host = host;
    int i = 0;
    for (VertexId pv : pattern.vertices())
        w.branch[pv] = clique[i++];
    for (const auto& [pe, ends] : pattern.edges()) {
        VertexId a = w.branch.at(ends.first), b = w.branch.at(ends.second);
        EdgePath route;
        route.start = a;
        route.edges.push_back(host.edges_between(a, b).front());
        w.routes[pe] = route;
    }
    return w;
}

} // namespace

ImmersionSearchResult find_immersion(const MultiGraph& host, const MultiGraph& pattern,
                                     long long budget) {
    ImmersionSearchResult result;
    RouteSearch rs{host, budget};

    if (pattern.vertex_count() == 0) {
        result.found = true;
        result.witness = ImmersionWitness{pattern, host, {}, {}};
        return result;
    }
    if (pattern.vertex_count() > host.vertex_count())
        return result;

    bool complete = is_complete_simple(pattern);
    if (complete && pattern.edge_count() > 0) {
        if (auto w = greedy_clique_witness(host, pattern)) {
            result.found = true;
            result.witness = std::move(w);
            return result;
        }
    }

    // Branch images need at least the pattern-vertex degree: a branch vertex
    // terminates that many edge-disjoint routes.
    std::vector<VertexId> pattern_vertices(pattern.vertices().begin(), pattern.vertices().end());
    std::sort(pattern_vertices.begin(), pattern_vertices.end(), [&](VertexId a, VertexId b) {
        return std::make_pair(-pattern.degree(a), a) < std::make_pair(-pattern.degree(b), b);
    });
    std::vector<VertexId> host_vertices(host.vertices().begin(), host.vertices().end());

    std::map<VertexId, VertexId> branch;
    std::set<VertexId> taken;

    // For complete patterns every bijection onto a vertex set is equivalent,
    // so images are forced to ascend; general patterns try all injections.
    std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
        if (idx == pattern_vertices.size()) {
            if (auto w = witness_from_branch(host, pattern, branch, rs)) {
                result.found = true;
                result.witness = std::move(w);
                return true;
            }
            return rs.out_of_budget;
        }
        if (!rs.spend())
            return true;
        VertexId pv = pattern_vertices[idx];
        VertexId floor = 0;
        if (complete)
            for (const auto& [q, img] : branch)
                floor = std::max(floor, img);
        for (VertexId hv : host_vertices) {
            if (hv <= floor || taken.count(hv))
                continue;
            if (host.degree(hv) < pattern.degree(pv))
                continue;
            branch[pv] = hv;
            taken.insert(hv);
            bool done = assign(idx + 1);
            taken.erase(hv);
            branch.erase(pv);
            if (done)
                return true;
        }
        return false;
    };
    assign(0);

    result.nodes = rs.nodes;
    result.budget_exhausted = rs.out_of_budget && !result.found;
    if (result.found) {
        Verdict v = verify_immersion(*result.witness);
        if (!v)
            throw GraphError("internal: found witness fails verification: " + v.message);
    }
    return result;
}

// ---------------------------------------------------------------------------
// lifting
// ---------------------------------------------------------------------------

namespace {

// Cuts cycles out of a walk until its vertices are pairwise distinct. Only
// removes edges, so edge-disjointness across routes is preserved.
EdgePath reduce_walk_to_path(const MultiGraph& g, const EdgePath& walk) {
    EdgePath p = walk;
    for (;;) {
        std::vector<VertexId> seq = path_vertices(g, p);
        int cut_from = -1, cut_to = -1;
        std::map<VertexId, int> first_at;
        for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
            auto it = first_at.find(seq[i]);
            if (it != first_at.end()) {
                cut_from = it->second;
                cut_to = i;
                break;
            }
            first_at[seq[i]] = i;
        }
        if (cut_from < 0)
            return p;
        p.edges.erase(p.edges.begin() + cut_from, p.edges.begin() + cut_to);
    }
}

struct PoolState {
    const MultiGraph& graph; // pre-merger graph the paths live in
    std::vector<EdgePath> paths;
    std::vector<bool> spent;

    PoolState(const MultiGraph& g, std::vector<EdgePath> p)
        : graph(g), paths(std::move(p)), spent(paths.size(), false) {}

    // Next unused connecting path, oriented to start at `from`.
    EdgePath take(VertexId from) {
        for (std::size_t i = 0; i < paths.size(); ++i) {
            if (spent[i])
                continue;
            spent[i] = true;
            if (paths[i].start == from)
                return paths[i];
            EdgePath r = reversed(graph, paths[i]);
            if (r.start != from)
                throw GraphError("pool path does not touch vertex " + std::to_string(from));
            return r;
        }
        throw GraphError("merger pool exhausted while lifting a witness");
    }
};

VertexId entry_vertex_at(const MultiGraph& g, const EdgePath& route, std::size_t pos) {
    VertexId at = route.start;
    for (std::size_t i = 0; i < pos; ++i)
        at = g.other_endpoint(route.edges[i], at);
    return at;
}

void lift_through_split(ImmersionWitness& w, const SplitOffEntry& e) {
    // Locate the (unique, by edge-disjointness) route using the created edge
    // and its entry vertex before touching the graph.
    EdgeId affected_route = 0;
    std::size_t pos = 0;
    VertexId entry = 0;
    for (auto& [pe, route] : w.routes) {
        auto it = std::find(route.edges.begin(), route.edges.end(), e.created);
        if (it == route.edges.end())
            continue;
        affected_route = pe;
        pos = it - route.edges.begin();
        entry = entry_vertex_at(w.host, route, pos);
        break;
    }

    undo_entry(w.host, e);
    if (affected_route == 0)
        return;

    VertexId shared = (e.e1_ends.first == e.e2_ends.first || e.e1_ends.first == e.e2_ends.second)
                          ? e.e1_ends.first
                          : e.e1_ends.second;
    VertexId outer1 = (e.e1_ends.first == shared) ? e.e1_ends.second : e.e1_ends.first;
    VertexId outer2 = (e.e2_ends.first == shared) ? e.e2_ends.second : e.e2_ends.first;

    std::vector<EdgeId> repl;
    if (entry == outer1)
        repl = {e.e1, e.e2};
    else if (entry == outer2)
        repl = {e.e2, e.e1};
    else
        throw GraphError("lift_witness: route does not enter the split edge at an endpoint");

    EdgePath& route = w.routes.at(affected_route);
    route.edges.erase(route.edges.begin() + pos);
    route.edges.insert(route.edges.begin() + pos, repl.begin(), repl.end());
    route = reduce_walk_to_path(w.host, route);
}

void lift_through_merger(ImmersionWitness& w, const MergerEntry& e) {
    // Everything that needs the post-merger graph is computed first.
    struct Touch {
        EdgeId pattern_edge = 0;
        bool at_end = false;    // merged vertex is an endpoint of the route
        std::size_t pos = 0;    // interior: index of merged in the vertex walk
    };
    std::vector<Touch> touches;
    for (auto& [pe, route] : w.routes) {
        std::vector<VertexId> seq = path_vertices(w.host, route);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] != e.merged)
                continue;
            if (i == 0) {
                // Normalize: affected routes end at the merged vertex.
                route = reversed(w.host, route);
                touches.push_back({pe, true, 0});
            } else if (i + 1 == seq.size()) {
                touches.push_back({pe, true, 0});
            } else {
                touches.push_back({pe, false, i});
            }
            break; // simple path: at most one visit
        }
    }

    undo_entry(w.host, e);
    PoolState pool(w.host, e.pool);

    auto side_of = [&](EdgeId edge) -> VertexId {
        auto it = e.reattached.find(edge);
        if (it == e.reattached.end())
            throw GraphError("lift_witness: route edge was not reattached by this merger");
        return it->second;
    };

    // Anchor a branch vertex sitting on the merged vertex to whichever side
    // most of its route ends already touch; the minority gets pool paths.
    VertexId merged_pattern_vertex = 0;
    for (const auto& [pv, hv] : w.branch)
        if (hv == e.merged)
            merged_pattern_vertex = pv;
    VertexId anchor = 0;
    if (merged_pattern_vertex != 0) {
        int votes_u1 = 0, votes_u2 = 0;
        for (const Touch& t : touches)
            if (t.at_end)
                (side_of(w.routes.at(t.pattern_edge).edges.back()) == e.u1 ? votes_u1 : votes_u2)++;
        anchor = votes_u2 > votes_u1 ? e.u2 : e.u1;
        w.branch[merged_pattern_vertex] = anchor;
    }

    for (const Touch& t : touches) {
        EdgePath& route = w.routes.at(t.pattern_edge);
        if (t.at_end) {
            VertexId side = side_of(route.edges.back());
            if (side != anchor) {
                EdgePath extension = pool.take(side);
                route.edges.insert(route.edges.end(), extension.edges.begin(),
                                   extension.edges.end());
            }
        } else {
            VertexId in_side = side_of(route.edges[t.pos - 1]);
            VertexId out_side = side_of(route.edges[t.pos]);
            if (in_side != out_side) {
                EdgePath bridge = pool.take(in_side);
                route.edges.insert(route.edges.begin() + t.pos, bridge.edges.begin(),
                                   bridge.edges.end());
            }
        }
        route = reduce_walk_to_path(w.host, route);
    }
}

} // namespace

ImmersionWitness lift_witness(const ImmersionWitness& w, const MultiGraph& original,
                              const OperationLog& log) {
    if (Verdict v = verify_immersion(w); !v)
        throw GraphError("lift_witness: input witness fails verification: " + v.message);
    ImmersionWitness cur = w;
    for (auto it = log.entries.rbegin(); it != log.entries.rend(); ++it) {
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, SplitOffEntry>) {
                    lift_through_split(cur, e);
                } else if constexpr (std::is_same_v<T, MergerEntry>) {
                    lift_through_merger(cur, e);
                } else {
                    undo_entry(cur.host, e); // pure restores; routes unaffected
                }
            },
            *it);
    }
    if (!(cur.host == original))
        throw GraphError("lift_witness: rewound host does not match the original graph");
    if (Verdict v = verify_immersion(cur); !v)
        throw GraphError("lift_witness: lifted witness fails verification: " + v.message);
    return cur;
}

} // namespace oddmorph
