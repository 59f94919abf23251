#include "oddmorph/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oddmorph {

int TreeDecomposition::width() const {
    int best = 0;
    for (const auto& [x, bag] : bags)
        best = std::max(best, static_cast<int>(bag.size()));
    return best - 1;
}

Verdict verify_tree_decomposition(const MultiGraph& g, const TreeDecomposition& td) {
    // Tree shape: connected and acyclic, with one bag per tree vertex.
    if (td.tree.vertex_count() == 0)
        return Verdict::fail("tree-invalid", "decomposition tree is empty");
    if (td.tree.edge_count() != td.tree.vertex_count() - 1 || has_cycle(td.tree))
        return Verdict::fail("tree-invalid", "decomposition tree is not a tree");
    if (td.bags.size() != td.tree.vertices().size())
        return Verdict::fail("bag-key-mismatch", "bags and tree vertices do not match");
    for (const auto& [x, bag] : td.bags)
        if (!td.tree.has_vertex(x))
            return Verdict::fail("bag-key-mismatch",
                                 "bag key " + std::to_string(x) + " is not a tree vertex");

    std::set<VertexId> covered;
    for (const auto& [x, bag] : td.bags)
        for (VertexId v : bag) {
            if (!g.has_vertex(v))
                return Verdict::fail("bag-key-mismatch",
                                     "bag " + std::to_string(x) + " names unknown vertex " +
                                         std::to_string(v));
            covered.insert(v);
        }
    for (VertexId v : g.vertices())
        if (!covered.count(v))
            return Verdict::fail("vertex-uncovered",
                                 "vertex " + std::to_string(v) + " is in no bag")
                .with("vertex", std::to_string(v));

    for (const auto& [e, ends] : g.edges()) {
        bool inside = false;
        for (const auto& [x, bag] : td.bags)
            if (bag.count(ends.first) && bag.count(ends.second)) {
                inside = true;
                break;
            }
        if (!inside)
            return Verdict::fail("edge-uncovered",
                                 "edge " + std::to_string(e) + " lies in no bag")
                .with("edge", std::to_string(e));
    }

    // Occurrence sets must induce connected subtrees.
    for (VertexId v : g.vertices()) {
        std::set<VertexId> occ;
        for (const auto& [x, bag] : td.bags)
            if (bag.count(v))
                occ.insert(x);
        VertexId root = *occ.begin();
        std::set<VertexId> seen{root};
        std::vector<VertexId> stack{root};
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : td.tree.neighbours(x))
                if (occ.count(y) && !seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
        if (seen.size() != occ.size())
            return Verdict::fail("occurrence-disconnected",
                                 "bags containing vertex " + std::to_string(v) +
                                     " are not connected in the tree")
                .with("vertex", std::to_string(v));
    }

    Verdict ok = Verdict::pass();
    ok.with("width", std::to_string(td.width()));
    return ok;
}

namespace {

// Neighbours of v reachable through the eliminated set S, as a bitmask.
uint32_t reach_through(const std::vector<uint32_t>& adj, int v, uint32_t eliminated) {
    uint32_t frontier = adj[v] & eliminated;
    uint32_t seen_elim = frontier;
    uint32_t outside = adj[v] & ~eliminated;
    while (frontier) {
        uint32_t next = 0;
        uint32_t f = frontier;
        while (f) {
            int u = __builtin_ctz(f);
            f &= f - 1;
            next |= adj[u];
        }
        outside |= next & ~eliminated;
        next &= eliminated;
        next &= ~seen_elim;
        seen_elim |= next;
        frontier = next;
    }
    return outside & ~(1u << v);
}

} // namespace

TreewidthResult exact_treewidth(const MultiGraph& g, int vertex_cap) {
    int n = g.vertex_count();
    if (n > vertex_cap)
        throw BudgetError("exact_treewidth: " + std::to_string(n) + " vertices exceed cap " +
                          std::to_string(vertex_cap));

    TreewidthResult result;
    if (n == 0) {
        // Lone empty bag; width -1 by convention.
        result.decomposition.tree.add_vertex(1);
        result.decomposition.bags[1] = {};
        result.width = -1;
        return result;
    }

    std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i)
        index[verts[i]] = i;
    std::vector<uint32_t> adj(n, 0);
    for (const auto& [e, ends] : g.edges()) {
        adj[index[ends.first]] |= 1u << index[ends.second];
        adj[index[ends.second]] |= 1u << index[ends.first];
    }

    // width[S] = best achievable max elimination degree when the vertices of
    // S are eliminated first; choice[S] records the vertex eliminated last.
    // S & ~(1<<v) < S numerically, so ascending order respects dependencies.
    uint32_t full = (1u << n) - 1;
    std::vector<uint8_t> width(full + 1, 0);
    std::vector<uint8_t> choice(full + 1, 0);

    for (uint32_t s = 1; s <= full; ++s) {
        int best = n + 1;
        int best_v = -1;
        uint32_t iter = s;
        while (iter) {
            int v = __builtin_ctz(iter);
            iter &= iter - 1;
            uint32_t rest = s & ~(1u << v);
            int q = __builtin_popcount(reach_through(adj, v, rest));
            int cand = std::max<int>(width[rest], q);
            if (cand < best) {
                best = cand;
                best_v = v;
            }
        }
        width[s] = static_cast<uint8_t>(best);
        choice[s] = static_cast<uint8_t>(best_v);
    }

    // Recover the elimination ordering (first eliminated first).
    std::vector<int> order(n);
    uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = choice[s];
        s &= ~(1u << choice[s]);
    }

    // Standard decomposition from an elimination ordering: bag(v) = {v} plus
    // v's neighbours through earlier-eliminated vertices; each bag hangs off
    // the bag of the earliest later member of its neighbourhood.
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i)
        position[order[i]] = i;
    TreeDecomposition td;
    std::vector<uint32_t> bag_mask(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        uint32_t before = 0;
        for (int j = 0; j < i; ++j)
            before |= 1u << order[j];
        bag_mask[i] = reach_through(adj, v, before) | (1u << v);
        td.tree.add_vertex(i + 1);
        std::set<VertexId>& bag = td.bags[i + 1];
        uint32_t m = bag_mask[i];
        while (m) {
            int u = __builtin_ctz(m);
            m &= m - 1;
            bag.insert(verts[u]);
        }
    }
    for (int i = 0; i < n; ++i) {
        uint32_t others = bag_mask[i] & ~(1u << order[i]);
        int parent = -1;
        while (others) {
            int u = __builtin_ctz(others);
            others &= others - 1;
            if (parent == -1 || position[u] < position[parent])
                parent = u;
        }
        if (parent >= 0)
            td.tree.add_edge(i + 1, position[parent] + 1);
        else if (i + 1 < n)
            td.tree.add_edge(i + 1, i + 2); // isolated piece: chain on
    }

    result.width = width[full];
    result.decomposition = std::move(td);
    Verdict v = verify_tree_decomposition(g, result.decomposition);
    if (!v)
        throw GraphError("internal: treewidth decomposition fails verification: " + v.message);
    if (result.decomposition.width() != result.width)
        throw GraphError("internal: decomposition width " +
                         std::to_string(result.decomposition.width()) +
                         " disagrees with DP value " + std::to_string(result.width));
    return result;
}

TreewidthBoundCheck check_oddomorphism_treewidth_bound(const MultiGraph& g,
                                                       const VertexColouring& f,
                                                       int vertex_cap) {
    if (Verdict v = verify_oddomorphism(g, f); !v)
        throw GraphError("check_oddomorphism_treewidth_bound: colouring is not valid: " +
                         v.message);
    TreewidthResult tw = exact_treewidth(g, vertex_cap);
    TreewidthBoundCheck out;
    out.width = tw.width;
    out.colours = f.colour_count;
    out.holds = tw.width >= f.colour_count - 1;
    out.decomposition = std::move(tw.decomposition);
    return out;
}

} // namespace oddmorph
