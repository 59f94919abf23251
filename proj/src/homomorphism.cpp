#include "oddmorph/homomorphism.hpp"

namespace oddmorph {

VertexId Homomorphism::image_of(VertexId v) const {
    auto it = assignment.find(v);
    if (it == assignment.end())
        throw GraphError("vertex " + std::to_string(v) + " has no image");
    return it->second;
}

Verdict check_homomorphism(const Homomorphism& hom) {
    if (hom.assignment.size() != hom.source.vertices().size())
        return Verdict::fail("not-total", "map does not assign every source vertex exactly once");
    for (const auto& [v, img] : hom.assignment) {
        if (!hom.source.has_vertex(v))
            return Verdict::fail("unknown-source-vertex", "map names vertex " + std::to_string(v))
                .with("vertex", std::to_string(v));
        if (!hom.target.has_vertex(img))
            return Verdict::fail("unknown-target-vertex",
                                 "image " + std::to_string(img) + " is not a target vertex")
                .with("vertex", std::to_string(img));
    }
    for (const auto& [e, ends] : hom.source.edges()) {
        VertexId fu = hom.image_of(ends.first), fv = hom.image_of(ends.second);
        if (fu == fv || !hom.target.adjacent(fu, fv))
            return Verdict::fail("edge-not-preserved",
                                 "source edge " + std::to_string(e) + " maps to non-edge {" +
                                     std::to_string(fu) + "," + std::to_string(fv) + "}")
                .with("edge", std::to_string(e));
    }
    return Verdict::pass();
}

ParityClass classify_vertex_general(const Homomorphism& hom, VertexId v) {
    if (!hom.source.has_vertex(v))
        throw GraphError("unknown vertex " + std::to_string(v));
    VertexId img = hom.image_of(v);
    // Edge count from v into the fibre of each target vertex, by multiplicity.
    std::map<VertexId, int> count;
    for (EdgeId e : hom.source.incident_edges(v))
        ++count[hom.image_of(hom.source.other_endpoint(e, v))];
    bool all_odd = true, all_even = true;
    for (VertexId u : hom.target.neighbours(img)) {
        auto it = count.find(u);
        int c = (it == count.end()) ? 0 : it->second;
        (c % 2 == 1 ? all_even : all_odd) = false;
    }
    if (all_odd)
        return ParityClass::Odd;
    if (all_even)
        return ParityClass::Even;
    return ParityClass::Neither;
}

Verdict verify_oddomorphism_general(const Homomorphism& hom) {
    if (Verdict h = check_homomorphism(hom); !h)
        return h;
    std::map<VertexId, int> odd_preimages;
    for (VertexId u : hom.target.vertices())
        odd_preimages[u] = 0;
    for (VertexId v : hom.source.vertices()) {
        ParityClass p = classify_vertex_general(hom, v);
        if (p == ParityClass::Neither)
            return Verdict::fail("neither-vertex",
                                 "vertex " + std::to_string(v) + " is neither odd nor even")
                .with("vertex", std::to_string(v));
        if (p == ParityClass::Odd)
            ++odd_preimages[hom.image_of(v)];
    }
    for (const auto& [u, n] : odd_preimages)
        if (n % 2 == 0)
            return Verdict::fail("even-odd-count",
                                 "target vertex " + std::to_string(u) + " has " +
                                     std::to_string(n) + " odd preimages")
                .with("target_vertex", std::to_string(u))
                .with("odd_preimages", std::to_string(n));
    return Verdict::pass();
}

Verdict verify_weak_oddomorphism(const Homomorphism& hom, const SubgraphSpec& sub) {
    for (VertexId v : sub.vertices)
        if (!hom.source.has_vertex(v))
            return Verdict::fail("not-a-subgraph", "vertex " + std::to_string(v) + " not in source");
    MultiGraph restricted;
    for (VertexId v : sub.vertices)
        restricted.add_vertex(v);
    for (EdgeId e : sub.edges) {
        if (!hom.source.has_edge(e))
            return Verdict::fail("not-a-subgraph", "edge " + std::to_string(e) + " not in source");
        auto [u, v] = hom.source.endpoints(e);
        if (!sub.vertices.count(u) || !sub.vertices.count(v))
            return Verdict::fail("not-a-subgraph",
                                 "edge " + std::to_string(e) + " leaves the vertex subset");
        restricted.restore_edge(e, {u, v});
    }
    Homomorphism r;
    r.source = std::move(restricted);
    r.target = hom.target;
    for (VertexId v : sub.vertices)
        r.assignment[v] = hom.image_of(v);
    return verify_oddomorphism_general(r);
}

Homomorphism colouring_as_homomorphism(const MultiGraph& g, const VertexColouring& f) {
    Homomorphism hom;
    hom.source = g;
    hom.target = complete_graph(f.colour_count);
    for (VertexId v : g.vertices())
        hom.assignment[v] = f.colour_of(v);
    return hom;
}

} // namespace oddmorph
