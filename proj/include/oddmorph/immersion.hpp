#pragma once

#include <map>
#include <optional>

#include "oddmorph/multigraph.hpp"

namespace oddmorph {

/// Certificate that `pattern` immerses into `host`: an injective branch map
/// on pattern vertices plus one host path per pattern edge, the paths
/// pairwise edge-disjoint and joining the mapped endpoints.
struct ImmersionWitness {
    MultiGraph pattern;
    MultiGraph host;
    std::map<VertexId, VertexId> branch;
    std::map<EdgeId, EdgePath> routes; // keyed by pattern edge id
};

/// Exhaustive witness check. Failure codes: "branch-not-injective",
/// "branch-vertex-missing", "route-missing", "route-invalid",
/// "route-endpoints", "edge-reuse".
Verdict verify_immersion(const ImmersionWitness& w);

struct ImmersionSearchResult {
    bool found = false;
    bool budget_exhausted = false;
    std::optional<ImmersionWitness> witness;
    long long nodes = 0;
};

/// Exact immersion search: enumerates branch maps (degree-filtered; complete
/// patterns enumerate vertex sets once instead of all labelings) and packs
/// edge-disjoint routes by backtracking, shortest paths first. With the
/// budget untouched, "not found" means no immersion exists. Every returned
/// witness passes verify_immersion.
ImmersionSearchResult find_immersion(const MultiGraph& host, const MultiGraph& pattern,
                                     long long budget = 2'000'000'000LL);

/// Transports a witness on the final graph of a surgery log back onto the
/// original graph, entry by entry in reverse: split-offs re-expand their
/// created edge, deletions restore silently, and routes crossing a merged
/// vertex are re-routed through the merger's recorded connecting paths
/// (each consumed at most once — throws GraphError when the pool runs dry).
/// The result is re-verified before it is returned.
ImmersionWitness lift_witness(const ImmersionWitness& w, const MultiGraph& original,
                              const OperationLog& log);

} // namespace oddmorph
