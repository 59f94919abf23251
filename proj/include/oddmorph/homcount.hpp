#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddmorph/bigint.hpp"
#include "oddmorph/multigraph.hpp"

namespace oddmorph {

/// Number of maps V(source) -> V(target) preserving adjacency, by direct
/// enumeration of all |V(target)|^|V(source)| assignments. Parallel edges
/// impose the same constraint as single ones, so multigraphs are collapsed
/// first. The budget bounds the number of assignments visited.
BigUint hom_count_bruteforce(const MultiGraph& source, const MultiGraph& target,
                             long long budget = 200'000'000LL);

/// Same count via dynamic programming over a nice tree decomposition of the
/// source; the practical method when the source has small treewidth. Refuses
/// sources whose bags would need an oversized table.
BigUint hom_count_td(const MultiGraph& source, const MultiGraph& target);

/// A family of source graphs to count from, generated exhaustively up to
/// isomorphism in a fixed order (vertex count, then canonical form).
struct FamilySpec {
    enum class Kind { Trees, Cycles, Paths, All, FileList };

    Kind kind = Kind::Trees;
    int max_vertices = 0;
    std::vector<MultiGraph> members; // FileList only

    static FamilySpec trees(int max_vertices) { return {Kind::Trees, max_vertices, {}}; }
    static FamilySpec cycles(int max_vertices) { return {Kind::Cycles, max_vertices, {}}; }
    static FamilySpec paths(int max_vertices) { return {Kind::Paths, max_vertices, {}}; }
    static FamilySpec all(int max_vertices) { return {Kind::All, max_vertices, {}}; }
};

std::vector<MultiGraph> generate_family(const FamilySpec& fam);

struct DistinguishResult {
    std::optional<MultiGraph> distinguisher;
    BigUint count_g;
    BigUint count_h;
    int members_checked = 0;
};

/// First family member (in generation order) with different homomorphism
/// counts into g and h, or nothing when every member agrees.
DistinguishResult distinguish(const MultiGraph& g, const MultiGraph& h, const FamilySpec& fam);

} // namespace oddmorph
