#pragma once

#include <map>
#include <set>

#include "oddmorph/colouring.hpp"
#include "oddmorph/multigraph.hpp"

namespace oddmorph {

/// Tree of bags over a graph's vertices: bags cover every vertex, every edge
/// lies inside some bag, and each vertex's bags form a connected subtree.
/// Width is the largest bag size minus one.
struct TreeDecomposition {
    MultiGraph tree;
    std::map<VertexId, std::set<VertexId>> bags; // keyed by tree vertex

    int width() const;
};

/// Failure codes: "tree-invalid", "bag-key-mismatch", "vertex-uncovered",
/// "edge-uncovered", "occurrence-disconnected". Width of a passing
/// decomposition is reported in the detail.
Verdict verify_tree_decomposition(const MultiGraph& g, const TreeDecomposition& td);

struct TreewidthResult {
    int width = -1;
    TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over vertex subsets (elimination
/// orderings), with a witnessing decomposition that verifies at the reported
/// width. Parallel edges are irrelevant to width and are collapsed first.
/// Graphs above the vertex cap are refused (the table is 2^n).
TreewidthResult exact_treewidth(const MultiGraph& g, int vertex_cap = 18);

struct TreewidthBoundCheck {
    bool holds = false;
    int width = -1;
    int colours = 0;
    TreeDecomposition decomposition;
};

/// For a verified oddomorphism with t colours, checks width >= t-1. A false
/// return would contradict the lower bound this toolkit certifies, so
/// callers treat it as a reportable counterexample.
TreewidthBoundCheck check_oddomorphism_treewidth_bound(const MultiGraph& g,
                                                       const VertexColouring& f,
                                                       int vertex_cap = 18);

} // namespace oddmorph
