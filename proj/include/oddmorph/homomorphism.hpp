#pragma once

#include <map>
#include <set>

#include "oddmorph/colouring.hpp"
#include "oddmorph/multigraph.hpp"

namespace oddmorph {

/// Vertex map between two graphs; valid when every source edge lands on a
/// target edge.
struct Homomorphism {
    MultiGraph source;
    MultiGraph target;
    std::map<VertexId, VertexId> assignment;

    VertexId image_of(VertexId v) const;
};

Verdict check_homomorphism(const Homomorphism& hom);

/// Parity of v against a general target: Odd (Even) when, for every target
/// neighbour u of v's image, the number of v's edges into the fibre of u is
/// odd (even). Specializes to classify_vertex when the target is complete
/// with one vertex per colour.
ParityClass classify_vertex_general(const Homomorphism& hom, VertexId v);

/// Oddomorphism onto a general target: a valid homomorphism, every source
/// vertex Odd or Even, and every target vertex with an odd number of Odd
/// preimages (a target vertex with no preimage fails).
Verdict verify_oddomorphism_general(const Homomorphism& hom);

/// Vertex/edge subset of a homomorphism's source.
struct SubgraphSpec {
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
};

/// True when hom restricted to the named subgraph is an oddomorphism onto
/// the full target.
Verdict verify_weak_oddomorphism(const Homomorphism& hom, const SubgraphSpec& sub);

/// The homomorphism onto K_t induced by a colouring (target vertices 1..t).
Homomorphism colouring_as_homomorphism(const MultiGraph& g, const VertexColouring& f);

} // namespace oddmorph
