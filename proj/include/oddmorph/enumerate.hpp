#pragma once

#include <string>
#include <vector>

#include "oddmorph/multigraph.hpp"

namespace oddmorph {

/// Canonical form of a graph: vertex count plus the lexicographically
/// maximal upper-triangular multiplicity rows over all vertex orderings.
/// Computed by exhaustive permutation search with twin and best-row pruning;
/// isolated-vertex labels and edge ids do not matter. Two graphs are
/// isomorphic (respecting edge multiplicities) iff their keys are equal.
struct CanonicalKey {
    int n = 0;
    std::string code;

    auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const MultiGraph& g);

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);

bool is_connected(const MultiGraph& g);

/// All simple graphs with 1..n vertices up to isomorphism, by vertex count
/// then canonical code. Exhaustive over edge subsets; keep n small (<= 6).
std::vector<MultiGraph> all_graphs_up_to(int n);

/// All connected simple graphs with 1..n vertices up to isomorphism, grown
/// by single-vertex extension with canonical deduplication (fine up to 8).
std::vector<MultiGraph> connected_graphs_up_to(int n);

/// All trees with 1..n vertices up to isomorphism, grown leaf by leaf.
std::vector<MultiGraph> trees_up_to(int n);

} // namespace oddmorph
