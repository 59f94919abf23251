#pragma once

#include <map>

#include "oddmorph/colouring.hpp"
#include "oddmorph/immersion.hpp"
#include "oddmorph/surgery.hpp"

namespace oddmorph {

/// Colour demand for extracting a K_t immersion: C(t,2) * (7t + 7).
long long required_colours(int t);

/// Graph + colouring + the log connecting them back to where they started.
struct PipelineState {
    MultiGraph graph;
    VertexColouring colouring;
    OperationLog log;
};

struct NormalizeStats {
    long long cycles_deleted = 0;
    long long paths_split = 0;
};

/// Applies, until neither fires: deletion of a 2-coloured cycle (parallel
/// pairs included), then splitting of a 2-coloured path of length >= 2
/// between Odd vertices of its two colours. Afterwards every colour-pair
/// subgraph is a forest with no such path. The colouring must verify as an
/// oddomorphism on entry and is re-verified after every step; each step
/// removes at least one edge, so the loop terminates.
///
/// A nonzero shuffle_seed randomizes which applicable operation fires next
/// (the result set is order-independent; tests exercise this), the default
/// order is deterministic: cycles before paths, colour pairs ascending.
PipelineState normalize(PipelineState state, NormalizeStats* stats = nullptr,
                        unsigned shuffle_seed = 0);

struct ExtractStats {
    int recursion_depth = 0;     // deepest level reached (0 = no merger)
    int mergers = 0;
    int base_case_depth = -1;    // level where the min-degree case fired
    bool min_degree_base_case = false;
    long long normalize_cycle_deletions = 0;
    long long normalize_path_splits = 0;
    long long split_phase_paths = 0;
    OperationLog trace;          // full log of the successful run
};

/// Produces a verified K_t immersion witness on g from a verified
/// oddomorphism with at least required_colours(t) colours. Each level
/// normalizes, splits every colour-pair forest into paths, simplifies, and
/// either finds the immersion outright (minimum simplified degree >= 7t+7)
/// or merges a parallel bundle's endpoints and recurses on the smaller
/// graph, lifting the witness back out through the recorded surgeries.
/// Internal re-verification failures throw PipelineError; they indicate
/// implementation bugs, not bad inputs.
ImmersionWitness extract_clique_immersion(const MultiGraph& g, const VertexColouring& f, int t,
                                          long long budget = 2'000'000'000LL,
                                          ExtractStats* stats = nullptr);

} // namespace oddmorph
