#pragma once

#include <map>
#include <optional>
#include <vector>

#include "oddmorph/multigraph.hpp"

namespace oddmorph {

/// Total assignment of colours {1..t} to the vertices of some graph.
/// Properness is a checked predicate, not a construction invariant.
struct VertexColouring {
    int colour_count = 0; // t
    std::map<VertexId, int> assignment;

    int colour_of(VertexId v) const;
    bool is_total_on(const MultiGraph& g) const;
    /// Vertices of colour c, ascending.
    std::vector<VertexId> colour_class(int c) const;

    bool operator==(const VertexColouring&) const = default;
};

/// Identity colouring of a graph with vertices 1..n: colour(v) = v.
VertexColouring identity_colouring(const MultiGraph& g);

/// No edge joins two vertices of the same colour.
Verdict check_proper(const MultiGraph& g, const VertexColouring& f);

enum class ParityClass { Odd, Even, Neither };

const char* to_string(ParityClass p);

/// Parity of v's edge count into every other colour class: Odd if each count
/// is odd, Even if each is even, Neither otherwise. Counts use edge
/// multiplicity, which coincides with neighbour counts on simple graphs.
/// With a single colour the classification is vacuous and reads Odd.
ParityClass classify_vertex(const MultiGraph& g, const VertexColouring& f, VertexId v);

/// Checks the full colouring contract: proper, every vertex Odd or Even, and
/// every colour class {1..t} has an odd number of Odd vertices (an empty
/// class fails, zero being even). Failure codes: "not-total",
/// "improper-edge", "neither-vertex", "even-odd-count".
Verdict verify_oddomorphism(const MultiGraph& g, const VertexColouring& f);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct ColouringSearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<VertexColouring> colouring;
    long long nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
};

/// Complete backtracking search for a valid t-colouring passing
/// verify_oddomorphism. g must be simple. Colours are canonicalized by
/// first use along ascending vertex ids, so the result is deterministic and
/// Exhausted genuinely means none exists. The budget caps assignment nodes.
ColouringSearchResult search_oddomorphism(const MultiGraph& g, int t,
                                          long long budget = 1'000'000'000LL);

/// Sub-multigraph on two colour classes keeping exactly the edges with one
/// endpoint of each colour; edge ids are preserved.
MultiGraph bipartite_subgraph(const MultiGraph& g, const VertexColouring& f, int i, int j);

} // namespace oddmorph
