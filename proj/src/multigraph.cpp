#include "oddmorph/multigraph.hpp"

#include <algorithm>

namespace oddmorph {

namespace {

std::string id_str(int v) { return std::to_string(v); }

const std::set<EdgeId> kNoEdges;

} // namespace

MultiGraph MultiGraph::with_vertices(int n) {
    MultiGraph g;
    for (int v = 1; v <= n; ++v)
        g.add_vertex(v);
    return g;
}

void MultiGraph::add_vertex(VertexId v) {
    if (v <= 0)
        throw GraphError("vertex ids are positive, got " + id_str(v));
    if (!vertices_.insert(v).second)
        throw GraphError("vertex " + id_str(v) + " already present");
    next_vertex_id_ = std::max(next_vertex_id_, v + 1);
}

VertexId MultiGraph::add_fresh_vertex() {
    VertexId v = next_vertex_id_;
    add_vertex(v);
    return v;
}

void MultiGraph::remove_vertex(VertexId v) {
    if (!has_vertex(v))
        throw GraphError("unknown vertex " + id_str(v));
    if (degree(v) != 0)
        throw GraphError("vertex " + id_str(v) + " is not isolated");
    vertices_.erase(v);
    incidence_.erase(v);
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
    EdgeId e = next_edge_id_;
    restore_edge(e, make_endpoints(u, v));
    return e;
}

void MultiGraph::restore_vertex(VertexId v) {
    add_vertex(v);
}

void MultiGraph::restore_edge(EdgeId e, Endpoints ends) {
    auto [u, v] = ends;
    if (u == v)
        throw GraphError("loop at vertex " + id_str(u) + " rejected");
    if (!has_vertex(u) || !has_vertex(v))
        throw GraphError("edge endpoints {" + id_str(u) + "," + id_str(v) + "} not in graph");
    if (!edges_.emplace(e, make_endpoints(u, v)).second)
        throw GraphError("edge id " + id_str(e) + " already present");
    incidence_[u].insert(e);
    incidence_[v].insert(e);
    next_edge_id_ = std::max(next_edge_id_, e + 1);
}

void MultiGraph::remove_edge(EdgeId e) {
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw GraphError("unknown edge " + id_str(e));
    auto [u, v] = it->second;
    incidence_[u].erase(e);
    incidence_[v].erase(e);
    edges_.erase(it);
}

void MultiGraph::rewire_edge(EdgeId e, VertexId from, VertexId to) {
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw GraphError("unknown edge " + id_str(e));
    auto [u, v] = it->second;
    if (u != from && v != from)
        throw GraphError("edge " + id_str(e) + " is not incident to vertex " + id_str(from));
    if (!has_vertex(to))
        throw GraphError("unknown vertex " + id_str(to));
    VertexId other = (u == from) ? v : u;
    if (other == to)
        throw GraphError("rewiring edge " + id_str(e) + " would create a loop");
    incidence_[from].erase(e);
    incidence_[to].insert(e);
    it->second = make_endpoints(other, to);
}

Endpoints MultiGraph::endpoints(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw GraphError("unknown edge " + id_str(e));
    return it->second;
}

VertexId MultiGraph::other_endpoint(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    if (v == a)
        return b;
    if (v == b)
        return a;
    throw GraphError("vertex " + id_str(v) + " is not an endpoint of edge " + id_str(e));
}

int MultiGraph::degree(VertexId v) const {
    if (!has_vertex(v))
        throw GraphError("unknown vertex " + id_str(v));
    auto it = incidence_.find(v);
    return it == incidence_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::set<EdgeId>& MultiGraph::incident_edges(VertexId v) const {
    if (!has_vertex(v))
        throw GraphError("unknown vertex " + id_str(v));
    auto it = incidence_.find(v);
    return it == incidence_.end() ? kNoEdges : it->second;
}

std::vector<VertexId> MultiGraph::neighbours(VertexId v) const {
    std::set<VertexId> out;
    for (EdgeId e : incident_edges(v))
        out.insert(other_endpoint(e, v));
    return {out.begin(), out.end()};
}

std::vector<EdgeId> MultiGraph::edges_between(VertexId u, VertexId v) const {
    std::vector<EdgeId> out;
    if (!has_vertex(u) || !has_vertex(v))
        throw GraphError("unknown vertex pair {" + id_str(u) + "," + id_str(v) + "}");
    Endpoints want = make_endpoints(u, v);
    for (EdgeId e : incident_edges(u))
        if (endpoints(e) == want)
            out.push_back(e);
    return out;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
    return static_cast<int>(edges_between(u, v).size());
}

bool MultiGraph::is_simple() const {
    std::set<Endpoints> seen;
    for (const auto& [e, ends] : edges_)
        if (!seen.insert(ends).second)
            return false;
    return true;
}

std::vector<VertexId> MultiGraph::isolated_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v : vertices_)
        if (degree(v) == 0)
            out.push_back(v);
    return out;
}

// -- constructors --------------------------------------------------------------

MultiGraph complete_graph(int n) {
    MultiGraph g = MultiGraph::with_vertices(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

MultiGraph cycle_graph(int n) {
    if (n < 3)
        throw GraphError("cycle graphs need at least 3 vertices");
    MultiGraph g = MultiGraph::with_vertices(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, v + 1);
    g.add_edge(n, 1);
    return g;
}

MultiGraph path_graph(int n) {
    MultiGraph g = MultiGraph::with_vertices(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

MultiGraph complete_bipartite(int a, int b) {
    MultiGraph g = MultiGraph::with_vertices(a + b);
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v)
            g.add_edge(u, v);
    return g;
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
    MultiGraph g = a;
    int shift = 0;
    for (VertexId v : a.vertices())
        shift = std::max(shift, v);
    std::map<VertexId, VertexId> moved;
    for (VertexId v : b.vertices()) {
        moved[v] = v + shift;
        g.add_vertex(v + shift);
    }
    for (const auto& [e, ends] : b.edges())
        g.add_edge(moved.at(ends.first), moved.at(ends.second));
    return g;
}

// -- paths ---------------------------------------------------------------------

std::vector<VertexId> path_vertices(const MultiGraph& g, const EdgePath& p) {
    if (!g.has_vertex(p.start))
        throw GraphError("path start " + id_str(p.start) + " not in graph");
    std::vector<VertexId> seq{p.start};
    VertexId at = p.start;
    for (EdgeId e : p.edges) {
        at = g.other_endpoint(e, at); // throws if the walk breaks
        seq.push_back(at);
    }
    return seq;
}

VertexId path_end(const MultiGraph& g, const EdgePath& p) {
    return path_vertices(g, p).back();
}

Verdict check_path(const MultiGraph& g, const EdgePath& p) {
    if (p.edges.empty())
        return Verdict::fail("empty-path", "a path needs at least one edge");
    std::vector<VertexId> seq;
    try {
        seq = path_vertices(g, p);
    } catch (const GraphError& e) {
        return Verdict::fail("broken-walk", e.what());
    }
    std::set<EdgeId> ids(p.edges.begin(), p.edges.end());
    if (ids.size() != p.edges.size())
        return Verdict::fail("edge-repeat", "path repeats an edge id");
    std::set<VertexId> vs(seq.begin(), seq.end());
    if (vs.size() != seq.size())
        return Verdict::fail("vertex-repeat", "path visits a vertex twice (walks are rejected)");
    return Verdict::pass();
}

Verdict check_cycle(const MultiGraph& g, const EdgePath& p) {
    if (p.edges.size() < 2)
        return Verdict::fail("too-short", "a cycle needs at least two edges");
    std::vector<VertexId> seq;
    try {
        seq = path_vertices(g, p);
    } catch (const GraphError& e) {
        return Verdict::fail("broken-walk", e.what());
    }
    if (seq.back() != p.start)
        return Verdict::fail("not-closed", "cycle does not return to its start vertex");
    std::set<EdgeId> ids(p.edges.begin(), p.edges.end());
    if (ids.size() != p.edges.size())
        return Verdict::fail("edge-repeat", "cycle repeats an edge id");
    std::set<VertexId> vs(seq.begin(), seq.end());
    if (vs.size() != seq.size() - 1)
        return Verdict::fail("vertex-repeat", "cycle revisits an internal vertex");
    return Verdict::pass();
}

EdgePath reversed(const MultiGraph& g, const EdgePath& p) {
    EdgePath r;
    r.start = path_end(g, p);
    r.edges.assign(p.edges.rbegin(), p.edges.rend());
    return r;
}

// -- log -------------------------------------------------------------------------

void OperationLog::append_all(const OperationLog& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

MultiGraph replay(const MultiGraph& original, const OperationLog& log) {
    MultiGraph g = original;
    for (const LogEntry& entry : log.entries) {
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, SplitOffEntry>) {
                    g.remove_edge(e.e1);
                    g.remove_edge(e.e2);
                    g.restore_edge(e.created, e.created_ends);
                } else if constexpr (std::is_same_v<T, CycleDeletedEntry>) {
                    for (const auto& [id, ends] : e.edges)
                        g.remove_edge(id);
                } else if constexpr (std::is_same_v<T, EdgeRemovedEntry>) {
                    g.remove_edge(e.e);
                } else if constexpr (std::is_same_v<T, VertexRemovedEntry>) {
                    g.remove_vertex(e.v);
                } else if constexpr (std::is_same_v<T, SimplifyKeptEntry>) {
                    for (EdgeId id : e.dropped)
                        g.remove_edge(id);
                } else if constexpr (std::is_same_v<T, MergerEntry>) {
                    for (const auto& [id, ends] : e.deleted_edges)
                        if (g.has_edge(id))
                            g.remove_edge(id);
                    g.add_vertex(e.merged);
                    for (const auto& [id, from] : e.reattached)
                        g.rewire_edge(id, from, e.merged);
                    g.remove_vertex(e.u1);
                    g.remove_vertex(e.u2);
                }
            },
            entry);
    }
    return g;
}

void undo_entry(MultiGraph& g, const LogEntry& entry) {
    std::visit(
        [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, SplitOffEntry>) {
                g.remove_edge(e.created);
                g.restore_edge(e.e1, e.e1_ends);
                g.restore_edge(e.e2, e.e2_ends);
            } else if constexpr (std::is_same_v<T, CycleDeletedEntry>) {
                for (const auto& [id, ends] : e.edges)
                    g.restore_edge(id, ends);
            } else if constexpr (std::is_same_v<T, EdgeRemovedEntry>) {
                g.restore_edge(e.e, e.ends);
            } else if constexpr (std::is_same_v<T, VertexRemovedEntry>) {
                g.restore_vertex(e.v);
            } else if constexpr (std::is_same_v<T, SimplifyKeptEntry>) {
                for (EdgeId id : e.dropped)
                    g.restore_edge(id, e.pair);
            } else if constexpr (std::is_same_v<T, MergerEntry>) {
                g.restore_vertex(e.u1);
                g.restore_vertex(e.u2);
                for (const auto& [id, from] : e.reattached)
                    g.rewire_edge(id, e.merged, from);
                g.remove_vertex(e.merged);
                for (const auto& [id, ends] : e.deleted_edges)
                    g.restore_edge(id, ends);
            }
        },
        entry);
}

// -- surgeries --------------------------------------------------------------------

MultiGraph split_off(const MultiGraph& g, EdgeId e1, EdgeId e2, OperationLog* log) {
    if (e1 == e2)
        throw GraphError("split_off needs two distinct edges");
    auto [a1, b1] = g.endpoints(e1);
    auto [a2, b2] = g.endpoints(e2);

    // The shared endpoint. Exactly one of the four pairings must match, and
    // the outer endpoints must differ (no loops).
    VertexId shared = 0;
    if (a1 == a2 || a1 == b2)
        shared = a1;
    if (b1 == a2 || b1 == b2) {
        if (shared != 0)
            throw GraphError("split_off edges share both endpoints only as a 2-cycle; outer vertices coincide");
        shared = b1;
    }
    if (shared == 0)
        throw GraphError("split_off edges do not share an endpoint");
    VertexId u = (a1 == shared) ? b1 : a1;
    VertexId w = (a2 == shared) ? b2 : a2;
    if (u == w)
        throw GraphError("split_off would create a loop at vertex " + std::to_string(u));

    MultiGraph out = g;
    out.remove_edge(e1);
    out.remove_edge(e2);
    EdgeId created = out.add_edge(u, w);
    if (log) {
        SplitOffEntry entry;
        entry.e1 = e1;
        entry.e1_ends = make_endpoints(a1, b1);
        entry.e2 = e2;
        entry.e2_ends = make_endpoints(a2, b2);
        entry.created = created;
        entry.created_ends = make_endpoints(u, w);
        log->append(entry);
    }
    return out;
}

MultiGraph split_path(const MultiGraph& g, const EdgePath& p, OperationLog* log) {
    Verdict v = check_path(g, p);
    if (!v)
        throw GraphError("split_path: " + v.message);
    if (p.length() == 1)
        return g;

    MultiGraph out = g;
    // Fold the path left to right; each step merges the accumulated edge with
    // the next path edge at their shared vertex.
    EdgeId acc = p.edges[0];
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
        OperationLog local;
        out = split_off(out, acc, p.edges[i], &local);
        acc = std::get<SplitOffEntry>(local.entries.back()).created;
        if (log)
            log->append_all(local);
    }
    return out;
}

MultiGraph simplify(const MultiGraph& g, OperationLog* log) {
    MultiGraph out = g;
    std::map<Endpoints, std::vector<EdgeId>> classes;
    for (const auto& [e, ends] : g.edges())
        classes[ends].push_back(e);
    for (auto& [ends, ids] : classes) {
        if (ids.size() < 2)
            continue;
        std::sort(ids.begin(), ids.end());
        SimplifyKeptEntry entry;
        entry.pair = ends;
        entry.kept = ids.front();
        for (std::size_t i = 1; i < ids.size(); ++i) {
            entry.dropped.push_back(ids[i]);
            out.remove_edge(ids[i]);
        }
        if (log)
            log->append(entry);
    }
    return out;
}

MultiGraph remove_isolated_vertices(const MultiGraph& g, OperationLog* log) {
    MultiGraph out = g;
    for (VertexId v : g.isolated_vertices()) {
        out.remove_vertex(v);
        if (log)
            log->append(VertexRemovedEntry{v});
    }
    return out;
}

bool has_cycle(const MultiGraph& g) {
    // DFS over edges; seeing a visited vertex through a new edge closes a
    // cycle (covers parallel pairs).
    std::set<VertexId> visited;
    for (VertexId root : g.vertices()) {
        if (visited.count(root))
            continue;
        std::vector<std::pair<VertexId, EdgeId>> stack{{root, 0}};
        visited.insert(root);
        while (!stack.empty()) {
            auto [v, via] = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident_edges(v)) {
                if (e == via)
                    continue;
                VertexId w = g.other_endpoint(e, v);
                if (visited.count(w))
                    return true;
                visited.insert(w);
                stack.push_back({w, e});
            }
        }
    }
    return false;
}

namespace {

// Walks from an odd-degree vertex of the residual forest to the nearest
// other odd-degree vertex; the connecting tree path is unique.
EdgePath peel_path(const MultiGraph& residual, VertexId from) {
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    std::vector<VertexId> queue{from};
    parent[from] = {0, 0};
    std::size_t head = 0;
    VertexId found = 0;
    while (head < queue.size() && !found) {
        VertexId v = queue[head++];
        for (EdgeId e : residual.incident_edges(v)) {
            VertexId w = residual.other_endpoint(e, v);
            if (parent.count(w))
                continue;
            parent[w] = {v, e};
            if (residual.degree(w) % 2 == 1) {
                found = w;
                break;
            }
            queue.push_back(w);
        }
    }
    if (!found)
        throw GraphError("forest component with a single odd-degree vertex (degree sum violation)");
    EdgePath p;
    std::vector<EdgeId> back;
    for (VertexId at = found; at != from; at = parent[at].first)
        back.push_back(parent[at].second);
    p.start = from;
    p.edges.assign(back.rbegin(), back.rend());
    return p;
}

} // namespace

std::vector<EdgePath> forest_path_decomposition(const MultiGraph& g) {
    if (has_cycle(g))
        throw GraphError("forest_path_decomposition: input contains a cycle");
    MultiGraph residual = g;
    std::vector<EdgePath> out;
    while (residual.edge_count() > 0) {
        // Peel from the smallest odd-degree vertex. Endpoints of every peeled
        // path stay odd in the *original* forest: a peel flips exactly its two
        // endpoints even, and they are never picked again.
        VertexId from = 0;
        for (VertexId v : residual.vertices()) {
            if (residual.degree(v) % 2 == 1) {
                from = v;
                break;
            }
        }
        if (from == 0)
            throw GraphError("edges remain but every degree is even; not a forest");
        EdgePath p = peel_path(residual, from);
        for (EdgeId e : p.edges)
            residual.remove_edge(e);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace oddmorph
