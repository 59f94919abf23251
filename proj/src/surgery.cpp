#include "oddmorph/surgery.hpp"

#include <algorithm>
#include <set>

namespace oddmorph {

bool is_two_coloured(const MultiGraph& g, const VertexColouring& f, const EdgePath& p) {
    std::set<int> colours;
    for (VertexId v : path_vertices(g, p))
        colours.insert(f.colour_of(v));
    return colours.size() <= 2;
}

MergerResult merger(const MultiGraph& g, const VertexColouring& f, VertexId u1, VertexId u2,
                    const std::vector<EdgePath>& paths, OperationLog* log) {
    if (u1 == u2)
        throw GraphError("merger needs two distinct vertices");
    if (!g.has_vertex(u1) || !g.has_vertex(u2))
        throw GraphError("merger vertices not in graph");
    if (f.colour_of(u1) != f.colour_of(u2))
        throw GraphError("merger vertices have different colours");

    std::set<EdgeId> path_edges;
    for (const EdgePath& p : paths) {
        if (Verdict v = check_path(g, p); !v)
            throw GraphError("merger path invalid: " + v.message);
        std::vector<VertexId> seq = path_vertices(g, p);
        std::set<VertexId> ends{seq.front(), seq.back()};
        if (ends != std::set<VertexId>{u1, u2})
            throw GraphError("merger path does not join the merged vertices");
        if (!is_two_coloured(g, f, p))
            throw GraphError("merger path is not 2-coloured");
        for (EdgeId e : p.edges)
            if (!path_edges.insert(e).second)
                throw GraphError("merger paths are not edge-disjoint");
    }

    MergerEntry entry;
    entry.u1 = u1;
    entry.u2 = u2;

    MultiGraph out = g;
    VertexId merged = out.add_fresh_vertex();
    entry.merged = merged;

    // Per common-neighbour parallel class, u1 and u2 edges cancel in pairs;
    // only the excess of the larger side survives, smallest ids first.
    std::set<VertexId> partners;
    for (VertexId w : g.neighbours(u1))
        partners.insert(w);
    for (VertexId w : g.neighbours(u2))
        partners.insert(w);
    partners.erase(u1);
    partners.erase(u2);
    for (VertexId w : partners) {
        std::vector<EdgeId> side1 = g.edges_between(u1, w);
        std::vector<EdgeId> side2 = g.edges_between(u2, w);
        std::size_t cancel = std::min(side1.size(), side2.size());
        auto survive = [&](const std::vector<EdgeId>& side, VertexId from) {
            for (std::size_t i = 0; i + cancel < side.size(); ++i) {
                out.rewire_edge(side[i], from, merged);
                entry.reattached[side[i]] = from;
            }
            for (std::size_t i = side.size() - cancel; i < side.size(); ++i) {
                entry.deleted_edges.emplace_back(side[i], g.endpoints(side[i]));
                out.remove_edge(side[i]);
            }
        };
        survive(side1, u1);
        survive(side2, u2);
    }
    // Edges directly joining u1 and u2 disappear with the identification.
    for (EdgeId e : g.edges_between(u1, u2)) {
        entry.deleted_edges.emplace_back(e, g.endpoints(e));
        out.remove_edge(e);
    }
    // Path edges not already cancelled away. Logged with their pre-merger
    // endpoints even when the survivor pass rewired them first.
    for (const EdgePath& p : paths)
        for (EdgeId e : p.edges)
            if (out.has_edge(e)) {
                entry.deleted_edges.emplace_back(e, g.endpoints(e));
                entry.reattached.erase(e);
                out.remove_edge(e);
            }
    entry.pool = paths;

    out.remove_vertex(u1);
    out.remove_vertex(u2);

    MergerResult result;
    result.graph = std::move(out);
    result.colouring = f;
    result.colouring.assignment.erase(u1);
    result.colouring.assignment.erase(u2);
    result.colouring.assignment[merged] = f.colour_of(u1);
    result.merged = merged;
    if (log)
        log->append(entry);
    return result;
}

MultiGraph delete_bicoloured_cycle(const MultiGraph& g, const VertexColouring& f,
                                   const EdgePath& cycle, OperationLog* log) {
    if (Verdict v = check_cycle(g, cycle); !v)
        throw GraphError("not a cycle: " + v.message);
    if (!is_two_coloured(g, f, cycle))
        throw GraphError("cycle is not 2-coloured");
    MultiGraph out = g;
    CycleDeletedEntry entry;
    for (EdgeId e : cycle.edges) {
        entry.edges.emplace_back(e, g.endpoints(e));
        out.remove_edge(e);
    }
    if (log)
        log->append(entry);
    return out;
}

MultiGraph split_odd_path(const MultiGraph& g, const VertexColouring& f, const EdgePath& p,
                          OperationLog* log) {
    if (Verdict v = check_path(g, p); !v)
        throw GraphError("split_odd_path: " + v.message);
    if (p.length() < 2)
        throw GraphError("split_odd_path needs length at least 2");
    if (!is_two_coloured(g, f, p))
        throw GraphError("split_odd_path: path is not 2-coloured");
    VertexId x = p.start;
    VertexId y = path_end(g, p);
    if (f.colour_of(x) == f.colour_of(y))
        throw GraphError("split_odd_path: endpoints share a colour");
    if (classify_vertex(g, f, x) != ParityClass::Odd ||
        classify_vertex(g, f, y) != ParityClass::Odd)
        throw GraphError("split_odd_path: endpoints must both be odd vertices");
    return split_path(g, p, log);
}

} // namespace oddmorph
