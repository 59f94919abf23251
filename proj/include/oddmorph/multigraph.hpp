#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oddmorph/errors.hpp"
#include "oddmorph/verdict.hpp"

namespace oddmorph {

using VertexId = int; // 1-based, unique within a graph
using EdgeId = int;   // 1-based, assigned in creation order, never reused

/// Unordered endpoint pair, stored normalized (first <= second).
using Endpoints = std::pair<VertexId, VertexId>;

inline Endpoints make_endpoints(VertexId u, VertexId v) {
    return u <= v ? Endpoints{u, v} : Endpoints{v, u};
}

/// Loop-free multigraph with stable edge identifiers.
///
/// Parallel edges are permitted and keep distinct ids; loops are rejected.
/// Fresh vertex/edge ids are allocated monotonically, so an id is unique for
/// the lifetime of a graph and everything derived from it by the surgery
/// operations below. All operations on this type are value-pure.
class MultiGraph {
public:
    MultiGraph() = default;

    /// Graph with vertices 1..n and no edges.
    static MultiGraph with_vertices(int n);

    // -- vertices -----------------------------------------------------------

    void add_vertex(VertexId v);
    VertexId add_fresh_vertex();
    /// Removes an isolated vertex; removing a vertex with incident edges is
    /// an error (edge surgery must happen first).
    void remove_vertex(VertexId v);
    bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
    const std::set<VertexId>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    // -- edges --------------------------------------------------------------

    /// Adds an edge {u,v} with a fresh id. Throws on loops or unknown vertices.
    EdgeId add_edge(VertexId u, VertexId v);
    void remove_edge(EdgeId e);
    bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
    Endpoints endpoints(EdgeId e) const;
    VertexId other_endpoint(EdgeId e, VertexId v) const;
    const std::map<EdgeId, Endpoints>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // -- queries ------------------------------------------------------------

    /// Degree counts edge multiplicity.
    int degree(VertexId v) const;
    const std::set<EdgeId>& incident_edges(VertexId v) const;
    /// Distinct adjacent vertices, ascending.
    std::vector<VertexId> neighbours(VertexId v) const;
    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;
    int multiplicity(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }
    bool is_simple() const;
    std::vector<VertexId> isolated_vertices() const;

    VertexId next_vertex_id() const { return next_vertex_id_; }
    EdgeId next_edge_id() const { return next_edge_id_; }

    /// Equality is on vertex and edge content (ids and endpoints), not on
    /// the id allocation counters.
    bool operator==(const MultiGraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

    // Internal: re-create an edge or vertex with a fixed id (log replay and
    // witness lifting). The id must be unused.
    void restore_vertex(VertexId v);
    void restore_edge(EdgeId e, Endpoints ends);
    /// Internal: move one endpoint of an existing edge (vertex merge).
    void rewire_edge(EdgeId e, VertexId from, VertexId to);

private:
    std::set<VertexId> vertices_;
    std::map<EdgeId, Endpoints> edges_;
    std::map<VertexId, std::set<EdgeId>> incidence_;
    VertexId next_vertex_id_ = 1;
    EdgeId next_edge_id_ = 1;
};

// -- convenience constructors ------------------------------------------------

MultiGraph complete_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);
MultiGraph complete_bipartite(int a, int b);
/// Disjoint union; vertices and edge ids of `b` are shifted past `a`'s.
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

// -- paths --------------------------------------------------------------------

/// Directed traversal of edges forming a simple path (or, with
/// start == end, a cycle). Consecutive edges share exactly the traversal
/// vertex; no edge id repeats; vertices are pairwise distinct (walks are
/// rejected everywhere).
struct EdgePath {
    VertexId start = 0;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const EdgePath&) const = default;
};

/// Vertex sequence visited by the path (length()+1 entries). Throws if the
/// edge sequence is not walkable in g.
std::vector<VertexId> path_vertices(const MultiGraph& g, const EdgePath& p);
VertexId path_end(const MultiGraph& g, const EdgePath& p);
/// Simple open path: walkable, all vertices distinct, length >= 1.
Verdict check_path(const MultiGraph& g, const EdgePath& p);
/// Closed cycle: walkable back to start, length >= 2 (a parallel pair is a
/// 2-cycle), internal vertices distinct.
Verdict check_cycle(const MultiGraph& g, const EdgePath& p);
EdgePath reversed(const MultiGraph& g, const EdgePath& p);

// -- operation log -------------------------------------------------------------

struct SplitOffEntry {
    EdgeId e1 = 0, e2 = 0;
    Endpoints e1_ends, e2_ends;
    EdgeId created = 0;
    Endpoints created_ends;
};

struct CycleDeletedEntry {
    std::vector<std::pair<EdgeId, Endpoints>> edges;
};

struct EdgeRemovedEntry {
    EdgeId e = 0;
    Endpoints ends;
};

struct VertexRemovedEntry {
    VertexId v = 0;
};

struct SimplifyKeptEntry {
    Endpoints pair;
    EdgeId kept = 0;
    std::vector<EdgeId> dropped;
};

struct MergerEntry {
    VertexId u1 = 0, u2 = 0;
    VertexId merged = 0;
    /// Surviving edges that changed endpoint, mapped to their pre-merger
    /// endpoint (u1 or u2).
    std::map<EdgeId, VertexId> reattached;
    std::vector<std::pair<EdgeId, Endpoints>> deleted_edges;
    /// The edge-disjoint connecting paths handed to the merger; consumed at
    /// most once each when a witness is lifted back across this entry.
    std::vector<EdgePath> pool;
};

using LogEntry = std::variant<SplitOffEntry, CycleDeletedEntry, EdgeRemovedEntry,
                              VertexRemovedEntry, SimplifyKeptEntry, MergerEntry>;

/// Reversible trace of graph surgeries. Replaying forward from the original
/// graph reproduces the derived graph, edge ids included; walking it
/// backwards drives witness lifting.
struct OperationLog {
    std::vector<LogEntry> entries;

    void append(LogEntry e) { entries.push_back(std::move(e)); }
    void append_all(const OperationLog& other);
    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

MultiGraph replay(const MultiGraph& original, const OperationLog& log);
/// Reverses the effect of a single log entry on g (graph content only).
void undo_entry(MultiGraph& g, const LogEntry& entry);

// -- surgeries -----------------------------------------------------------------

/// Replaces edges e1={u,v}, e2={v,w} by a fresh edge {u,w}. Requires the two
/// edges to share exactly one endpoint and u != w.
MultiGraph split_off(const MultiGraph& g, EdgeId e1, EdgeId e2, OperationLog* log = nullptr);

/// Splits a whole path down to a single fresh edge joining its endpoints;
/// the identity on paths of length 1. Equivalent to length()-1 split_off
/// steps, and logged as exactly those steps.
MultiGraph split_path(const MultiGraph& g, const EdgePath& p, OperationLog* log = nullptr);

/// Keeps the smallest-id edge of every parallel class, drops the rest.
MultiGraph simplify(const MultiGraph& g, OperationLog* log = nullptr);

/// Removes every isolated vertex, ascending id order.
MultiGraph remove_isolated_vertices(const MultiGraph& g, OperationLog* log = nullptr);

/// Edge-disjoint paths partitioning E(g), each with odd-degree endpoints.
/// g must be a forest (no cycles, hence no parallel edges).
std::vector<EdgePath> forest_path_decomposition(const MultiGraph& g);

bool has_cycle(const MultiGraph& g);

} // namespace oddmorph
