#include "oddmorph/colouring.hpp"

#include <algorithm>

namespace oddmorph {

int VertexColouring::colour_of(VertexId v) const {
    auto it = assignment.find(v);
    if (it == assignment.end())
        throw GraphError("vertex " + std::to_string(v) + " has no colour");
    return it->second;
}

bool VertexColouring::is_total_on(const MultiGraph& g) const {
    if (assignment.size() != g.vertices().size())
        return false;
    for (VertexId v : g.vertices())
        if (!assignment.count(v))
            return false;
    return true;
}

std::vector<VertexId> VertexColouring::colour_class(int c) const {
    std::vector<VertexId> out;
    for (const auto& [v, col] : assignment)
        if (col == c)
            out.push_back(v);
    return out;
}

VertexColouring identity_colouring(const MultiGraph& g) {
    VertexColouring f;
    f.colour_count = g.vertex_count();
    int c = 1;
    for (VertexId v : g.vertices())
        f.assignment[v] = c++;
    return f;
}

Verdict check_proper(const MultiGraph& g, const VertexColouring& f) {
    if (!f.is_total_on(g))
        return Verdict::fail("not-total", "colouring does not assign every vertex exactly once");
    for (const auto& [v, c] : f.assignment)
        if (c < 1 || c > f.colour_count)
            return Verdict::fail("colour-range", "colour out of range at vertex " + std::to_string(v))
                .with("vertex", std::to_string(v));
    for (const auto& [e, ends] : g.edges())
        if (f.colour_of(ends.first) == f.colour_of(ends.second))
            return Verdict::fail("improper-edge",
                                 "edge " + std::to_string(e) + " is monochromatic")
                .with("edge", std::to_string(e));
    return Verdict::pass();
}

ParityClass classify_vertex(const MultiGraph& g, const VertexColouring& f, VertexId v) {
    if (!g.has_vertex(v))
        throw GraphError("unknown vertex " + std::to_string(v));
    int own = f.colour_of(v);
    std::vector<int> count(f.colour_count + 1, 0);
    for (EdgeId e : g.incident_edges(v)) {
        int c = f.colour_of(g.other_endpoint(e, v));
        if (c == own)
            throw GraphError("colouring is improper at vertex " + std::to_string(v));
        if (c < 1 || c > f.colour_count)
            throw GraphError("colour " + std::to_string(c) + " out of range 1.." +
                             std::to_string(f.colour_count));
        ++count[c];
    }
    bool all_odd = true, all_even = true;
    for (int c = 1; c <= f.colour_count; ++c) {
        if (c == own)
            continue;
        (count[c] % 2 == 1 ? all_even : all_odd) = false;
    }
    if (all_odd)
        return ParityClass::Odd;
    if (all_even)
        return ParityClass::Even;
    return ParityClass::Neither;
}

const char* to_string(ParityClass p) {
    switch (p) {
    case ParityClass::Odd: return "odd";
    case ParityClass::Even: return "even";
    default: return "neither";
    }
}

Verdict verify_oddomorphism(const MultiGraph& g, const VertexColouring& f) {
    if (Verdict proper = check_proper(g, f); !proper)
        return proper;
    std::vector<int> odd_per_class(f.colour_count + 1, 0);
    for (VertexId v : g.vertices()) {
        ParityClass p = classify_vertex(g, f, v);
        if (p == ParityClass::Neither)
            return Verdict::fail("neither-vertex",
                                 "vertex " + std::to_string(v) + " is neither odd nor even")
                .with("vertex", std::to_string(v));
        if (p == ParityClass::Odd)
            ++odd_per_class[f.colour_of(v)];
    }
    for (int c = 1; c <= f.colour_count; ++c)
        if (odd_per_class[c] % 2 == 0)
            return Verdict::fail("even-odd-count",
                                 "colour class " + std::to_string(c) + " has " +
                                     std::to_string(odd_per_class[c]) + " odd vertices")
                .with("class", std::to_string(c))
                .with("odd_vertices", std::to_string(odd_per_class[c]));
    return Verdict::pass();
}

namespace {

struct Searcher {
    const MultiGraph& g;
    int t;
    long long budget;
    long long nodes = 0;

    std::vector<VertexId> order;          // ascending ids
    std::vector<int> colour;              // by position, 0 = unassigned
    std::vector<std::vector<int>> adj;    // positions of neighbours
    std::vector<int> closure_done_at;     // position completing N[v]
    std::vector<std::vector<int>> check_at; // positions to parity-check after step i

    bool exhausted_cleanly = true;
    std::optional<VertexColouring> found;

    explicit Searcher(const MultiGraph& graph, int colours, long long node_budget)
        : g(graph), t(colours), budget(node_budget) {
        order.assign(g.vertices().begin(), g.vertices().end());
        int n = static_cast<int>(order.size());
        colour.assign(n, 0);
        adj.resize(n);
        std::map<VertexId, int> pos;
        for (int i = 0; i < n; ++i)
            pos[order[i]] = i;
        for (int i = 0; i < n; ++i)
            for (VertexId w : g.neighbours(order[i]))
                adj[i].push_back(pos[w]);
        closure_done_at.assign(n, 0);
        check_at.resize(n);
        for (int i = 0; i < n; ++i) {
            int last = i;
            for (int j : adj[i])
                last = std::max(last, j);
            closure_done_at[i] = last;
            check_at[last].push_back(i);
        }
    }

    // Final once N[v] is coloured: later vertices are not adjacent to v, so
    // no count of v can change.
    ParityClass parity_at(int i) const {
        std::vector<int> count(t + 1, 0);
        for (int j : adj[i])
            ++count[colour[j]];
        bool all_odd = true, all_even = true;
        for (int c = 1; c <= t; ++c) {
            if (c == colour[i])
                continue;
            (count[c] % 2 == 1 ? all_even : all_odd) = false;
        }
        if (all_odd)
            return ParityClass::Odd;
        if (all_even)
            return ParityClass::Even;
        return ParityClass::Neither;
    }

    bool accept() {
        VertexColouring f;
        f.colour_count = t;
        for (std::size_t i = 0; i < order.size(); ++i)
            f.assignment[order[i]] = colour[i];
        if (verify_oddomorphism(g, f)) {
            found = std::move(f);
            return true;
        }
        return false;
    }

    bool assign(int i, int used) {
        if (static_cast<int>(order.size()) == i)
            return accept();
        if (++nodes > budget) {
            exhausted_cleanly = false;
            return false;
        }
        // Symmetry breaking: a new colour may only be the next unused one.
        int limit = std::min(t, used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool proper = true;
            for (int j : adj[i])
                if (j < i && colour[j] == c) {
                    proper = false;
                    break;
                }
            if (!proper)
                continue;
            colour[i] = c;
            bool viable = true;
            for (int v : check_at[i])
                if (parity_at(v) == ParityClass::Neither) {
                    viable = false;
                    break;
                }
            if (viable && assign(i + 1, std::max(used, c)))
                return true;
            colour[i] = 0;
            if (!exhausted_cleanly)
                return false;
        }
        return false;
    }
};

} // namespace

ColouringSearchResult search_oddomorphism(const MultiGraph& g, int t, long long budget) {
    if (t < 1)
        throw GraphError("colour count must be positive");
    if (!g.is_simple())
        throw GraphError("search_oddomorphism expects a simple graph");

    ColouringSearchResult result;

    // Every colour class needs an odd vertex, and odd vertices have degree
    // at least t-1; too few such vertices rules the search out up front.
    int capable = 0;
    for (VertexId v : g.vertices())
        if (g.degree(v) >= t - 1)
            ++capable;
    if (g.vertex_count() < t || capable < t) {
        result.status = SearchStatus::Exhausted;
        return result;
    }

    Searcher s(g, t, budget);
    bool hit = s.assign(0, 0);
    result.nodes = s.nodes;
    if (hit) {
        result.status = SearchStatus::Found;
        result.colouring = std::move(s.found);
    } else {
        result.status = s.exhausted_cleanly ? SearchStatus::Exhausted : SearchStatus::BudgetExceeded;
    }
    return result;
}

MultiGraph bipartite_subgraph(const MultiGraph& g, const VertexColouring& f, int i, int j) {
    if (i == j)
        throw GraphError("bipartite_subgraph needs two distinct colours");
    if (!f.is_total_on(g))
        throw GraphError("colouring does not cover the graph");
    MultiGraph out;
    for (VertexId v : g.vertices())
        if (f.colour_of(v) == i || f.colour_of(v) == j)
            out.add_vertex(v);
    for (const auto& [e, ends] : g.edges()) {
        int cu = f.colour_of(ends.first), cv = f.colour_of(ends.second);
        if ((cu == i && cv == j) || (cu == j && cv == i))
            out.restore_edge(e, ends);
    }
    return out;
}

} // namespace oddmorph
