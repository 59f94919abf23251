#pragma once

#include <vector>

#include "oddmorph/colouring.hpp"
#include "oddmorph/multigraph.hpp"

namespace oddmorph {

/// Vertices of the path use at most two colours.
bool is_two_coloured(const MultiGraph& g, const VertexColouring& f, const EdgePath& p);

struct MergerResult {
    MultiGraph graph;
    VertexColouring colouring;
    VertexId merged = 0;
};

/// Identifies the same-coloured vertices u1, u2 into a fresh vertex whose
/// neighbourhood is the symmetric difference of the two originals (parallel
/// classes cancel pairwise, smaller ids of the larger side survive), then
/// deletes the edges of the given pairwise edge-disjoint 2-coloured
/// (u1,u2)-paths. The paths may be empty. When the input colouring is a
/// valid oddomorphism the output one is too; callers re-verify rather than
/// assume.
MergerResult merger(const MultiGraph& g, const VertexColouring& f, VertexId u1, VertexId u2,
                    const std::vector<EdgePath>& paths, OperationLog* log = nullptr);

/// Deletes the edges of a cycle alive inside a single colour pair (a
/// parallel pair counts as a 2-cycle). The colouring is untouched and stays
/// an oddomorphism when it was one.
MultiGraph delete_bicoloured_cycle(const MultiGraph& g, const VertexColouring& f,
                                   const EdgePath& cycle, OperationLog* log = nullptr);

/// split_path for a 2-coloured path of length >= 2 whose endpoints are Odd
/// vertices of the path's two colours; the operation that keeps an
/// oddomorphism valid while shrinking the graph.
MultiGraph split_odd_path(const MultiGraph& g, const VertexColouring& f, const EdgePath& p,
                          OperationLog* log = nullptr);

} // namespace oddmorph
