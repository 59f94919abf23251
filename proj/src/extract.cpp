#include "oddmorph/extract.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace oddmorph {

long long required_colours(int t) {
    if (t < 1)
        throw GraphError("required_colours needs t >= 1");
    long long pairs = static_cast<long long>(t) * (t - 1) / 2;
    return pairs * (7LL * t + 7);
}

namespace {

void audit_oddomorphism(const MultiGraph& g, const VertexColouring& f, const char* where) {
    if (Verdict v = verify_oddomorphism(g, f); !v)
        throw PipelineError(std::string("audit failed after ") + where + ": " + v.message +
                            " (" + v.code + ")");
}

// First cycle of the subgraph in DFS order (ascending vertices and edge
// ids), as a closed EdgePath. Parallel pairs surface as 2-cycles.
std::optional<EdgePath> find_cycle(const MultiGraph& sub) {
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    std::set<VertexId> visited;
    for (VertexId root : sub.vertices()) {
        if (visited.count(root))
            continue;
        std::vector<std::pair<VertexId, EdgeId>> stack{{root, 0}};
        visited.insert(root);
        parent[root] = {0, 0};
        while (!stack.empty()) {
            auto [v, via] = stack.back();
            stack.pop_back();
            for (EdgeId e : sub.incident_edges(v)) {
                if (e == via)
                    continue;
                VertexId w = sub.other_endpoint(e, v);
                if (!visited.count(w)) {
                    visited.insert(w);
                    parent[w] = {v, e};
                    stack.push_back({w, e});
                    continue;
                }
                // Closing edge: walk both endpoints up to their meeting
                // point to recover the cycle.
                std::vector<VertexId> v_anc{v};
                for (VertexId a = v; parent[a].first != 0; a = parent[a].first)
                    v_anc.push_back(parent[a].first);
                std::vector<VertexId> w_anc{w};
                for (VertexId a = w; parent[a].first != 0; a = parent[a].first)
                    w_anc.push_back(parent[a].first);
                std::set<VertexId> v_set(v_anc.begin(), v_anc.end());
                VertexId meet = 0;
                for (VertexId a : w_anc)
                    if (v_set.count(a)) {
                        meet = a;
                        break;
                    }
                EdgePath cycle;
                cycle.start = meet;
                std::vector<EdgeId> down;
                for (VertexId a = v; a != meet; a = parent[a].first)
                    down.push_back(parent[a].second);
                cycle.edges.assign(down.rbegin(), down.rend());
                cycle.edges.push_back(e);
                for (VertexId a = w; a != meet; a = parent[a].first)
                    cycle.edges.push_back(parent[a].second);
                return cycle;
            }
        }
    }
    return std::nullopt;
}

// BFS path between two vertices of the subgraph (shortest, deterministic).
std::optional<EdgePath> bfs_path(const MultiGraph& sub, VertexId from, VertexId to) {
    if (from == to)
        return std::nullopt;
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    std::vector<VertexId> queue{from};
    parent[from] = {0, 0};
    std::size_t head = 0;
    while (head < queue.size()) {
        VertexId v = queue[head++];
        for (EdgeId e : sub.incident_edges(v)) {
            VertexId w = sub.other_endpoint(e, v);
            if (parent.count(w))
                continue;
            parent[w] = {v, e};
            if (w == to) {
                EdgePath p;
                p.start = from;
                std::vector<EdgeId> back;
                for (VertexId a = to; a != from; a = parent[a].first)
                    back.push_back(parent[a].second);
                p.edges.assign(back.rbegin(), back.rend());
                return p;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

// Sub-multigraphs per colour pair, restricted to incident vertices, built
// in one pass. Only pairs that actually carry edges appear.
std::map<std::pair<int, int>, MultiGraph> colour_pair_buckets(const MultiGraph& g,
                                                              const VertexColouring& f) {
    std::map<std::pair<int, int>, MultiGraph> out;
    for (const auto& [e, ends] : g.edges()) {
        int cu = f.colour_of(ends.first), cv = f.colour_of(ends.second);
        if (cu == cv)
            throw GraphError("monochromatic edge " + std::to_string(e));
        MultiGraph& sub = out[{std::min(cu, cv), std::max(cu, cv)}];
        if (!sub.has_vertex(ends.first))
            sub.add_vertex(ends.first);
        if (!sub.has_vertex(ends.second))
            sub.add_vertex(ends.second);
        sub.restore_edge(e, ends);
    }
    return out;
}

struct NormalizeCandidate {
    bool is_cycle = false;
    EdgePath path;
};

std::vector<NormalizeCandidate> normalize_candidates(const MultiGraph& g,
                                                     const VertexColouring& f) {
    std::vector<NormalizeCandidate> cycles, paths;
    std::map<VertexId, bool> odd;
    for (VertexId v : g.vertices())
        odd[v] = classify_vertex(g, f, v) == ParityClass::Odd;
    for (const auto& [pair, sub] : colour_pair_buckets(g, f)) {
        auto [i, j] = pair;
        if (auto cycle = find_cycle(sub)) {
            cycles.push_back({true, *cycle});
            continue;
        }
        bool found = false;
        for (VertexId x : sub.vertices()) {
            if (found)
                break;
            if (f.colour_of(x) != i || !odd[x])
                continue;
            for (VertexId y : sub.vertices()) {
                if (f.colour_of(y) != j || !odd[y])
                    continue;
                if (auto p = bfs_path(sub, x, y); p && p->length() >= 2) {
                    paths.push_back({false, *p});
                    found = true;
                    break;
                }
            }
        }
    }
    // Cycles first keeps every colour-pair subgraph a forest by the time
    // path splitting starts in the deterministic order.
    cycles.insert(cycles.end(), paths.begin(), paths.end());
    return cycles;
}

} // namespace

PipelineState normalize(PipelineState state, NormalizeStats* stats, unsigned shuffle_seed) {
    audit_oddomorphism(state.graph, state.colouring, "normalize entry");
    std::mt19937 rng(shuffle_seed);
    long long step_limit = state.graph.edge_count() + 1;
    for (long long step = 0; step <= step_limit; ++step) {
        std::vector<NormalizeCandidate> candidates =
            normalize_candidates(state.graph, state.colouring);
        if (candidates.empty())
            return state;
        std::size_t pick = 0;
        if (shuffle_seed != 0)
            pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
        const NormalizeCandidate& c = candidates[pick];
        if (c.is_cycle) {
            state.graph =
                delete_bicoloured_cycle(state.graph, state.colouring, c.path, &state.log);
            if (stats)
                ++stats->cycles_deleted;
        } else {
            state.graph = split_odd_path(state.graph, state.colouring, c.path, &state.log);
            if (stats)
                ++stats->paths_split;
        }
        audit_oddomorphism(state.graph, state.colouring, "normalize step");
    }
    throw PipelineError("normalize did not terminate within its edge-count bound");
}

namespace {

struct SplitPhaseResult {
    MultiGraph graph; // after splitting, isolated-vertex removal, pre-simplify
    OperationLog log;
    std::map<EdgeId, EdgePath> created_by; // fresh edge -> generating path
    long long paths = 0;
};

SplitPhaseResult split_phase(const MultiGraph& g_norm, const VertexColouring& f) {
    SplitPhaseResult out;
    out.graph = g_norm;

    std::set<VertexId> evens;
    for (VertexId v : g_norm.vertices())
        if (classify_vertex(g_norm, f, v) == ParityClass::Even)
            evens.insert(v);

    for (const auto& [pair, sub] : colour_pair_buckets(g_norm, f)) {
        for (const EdgePath& p : forest_path_decomposition(sub)) {
            ++out.paths;
            if (p.length() < 2)
                continue;
            OperationLog local;
            out.graph = split_path(out.graph, p, &local);
            EdgeId created = std::get<SplitOffEntry>(local.entries.back()).created;
            out.created_by[created] = p;
            out.log.append_all(local);
        }
    }

    std::set<VertexId> isolated;
    for (VertexId v : out.graph.isolated_vertices())
        isolated.insert(v);
    if (isolated != evens)
        throw PipelineError("split phase isolated " + std::to_string(isolated.size()) +
                            " vertices but " + std::to_string(evens.size()) +
                            " vertices are even; the two sets must coincide");
    out.graph = remove_isolated_vertices(out.graph, &out.log);
    return out;
}

ImmersionWitness extract_level(const MultiGraph& g, const VertexColouring& f, int t,
                               long long budget, ExtractStats* stats, int depth) {
    if (depth > g.vertex_count() + 1)
        throw PipelineError("recursion exceeded the vertex-count bound");
    if (stats)
        stats->recursion_depth = std::max(stats->recursion_depth, depth);
    audit_oddomorphism(g, f, "level entry");

    // Normalize: colour-pair subgraphs become forests with no splittable
    // odd path.
    NormalizeStats nstats;
    PipelineState state = normalize({g, f, {}}, &nstats);
    if (stats) {
        stats->normalize_cycle_deletions += nstats.cycles_deleted;
        stats->normalize_path_splits += nstats.paths_split;
    }
    const MultiGraph& g_norm = state.graph;

    // Split every decomposition path of every colour-pair forest, then drop
    // the vertices this isolates (exactly the even ones).
    SplitPhaseResult split = split_phase(g_norm, f);
    if (stats)
        stats->split_phase_paths += split.paths;
    const MultiGraph& g_prime = split.graph;

    // Odd vertices must now carry one edge per other colour.
    long long needed = required_colours(t) - 1;
    for (VertexId v : g_prime.vertices())
        if (g_prime.degree(v) < needed)
            throw PipelineError("vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g_prime.degree(v)) + " after splitting; expected >= " +
                                std::to_string(needed));

    OperationLog simplify_log;
    MultiGraph g_simple = simplify(g_prime, &simplify_log);
    int min_deg = g_simple.vertex_count() == 0 ? 0 : g_simple.vertex_count();
    for (VertexId v : g_simple.vertices())
        min_deg = std::min(min_deg, g_simple.degree(v));

    if (g_simple.vertex_count() > 0 && min_deg >= 7 * t + 7) {
        if (stats) {
            stats->min_degree_base_case = true;
            if (stats->base_case_depth < 0)
                stats->base_case_depth = depth;
        }
        ImmersionSearchResult found = find_immersion(g_simple, complete_graph(t), budget);
        if (found.budget_exhausted)
            throw BudgetError("immersion search ran out of budget in the base case");
        if (!found.found)
            throw PipelineError("no K_" + std::to_string(t) +
                                " immersion at minimum simplified degree " +
                                std::to_string(min_deg) + "; this contradicts the degree bound");
        OperationLog combined = state.log;
        combined.append_all(split.log);
        combined.append_all(simplify_log);
        if (stats)
            stats->trace.append_all(combined);
        return lift_witness(*found.witness, g, combined);
    }

    // Some vertex has few distinct neighbours but full multi-degree, so a
    // thick parallel bundle exists; merge its endpoints and recurse. The
    // split phase is discarded: the merger operates on the normalized graph,
    // deleting the bundle's generating paths.
    long long bundle_size = static_cast<long long>(t) * (t - 1) / 2;
    std::optional<Endpoints> bundle;
    for (const auto& [e, ends] : g_prime.edges()) {
        if (g_prime.multiplicity(ends.first, ends.second) >= bundle_size) {
            if (!bundle || ends < *bundle)
                bundle = ends;
        }
    }
    if (!bundle)
        throw PipelineError("minimum simplified degree " + std::to_string(min_deg) +
                            " is below " + std::to_string(7 * t + 7) +
                            " yet no bundle of " + std::to_string(bundle_size) +
                            " parallel edges exists");
    auto [x, y] = *bundle;
    if (f.colour_of(x) != f.colour_of(y))
        throw PipelineError("bundle endpoints " + std::to_string(x) + "," + std::to_string(y) +
                            " have different colours; splitting cannot have produced this");

    std::vector<EdgePath> pool;
    for (EdgeId e : g_prime.edges_between(x, y)) {
        auto it = split.created_by.find(e);
        if (it == split.created_by.end())
            throw PipelineError("bundle edge " + std::to_string(e) +
                                " was not created by the split phase");
        pool.push_back(it->second);
    }

    OperationLog merge_log;
    MergerResult merged = merger(g_norm, f, x, y, pool, &merge_log);
    if (stats)
        ++stats->mergers;
    audit_oddomorphism(merged.graph, merged.colouring, "merger");

    OperationLog combined = state.log;
    combined.append_all(merge_log);
    if (stats)
        stats->trace.append_all(combined); // chronological: this level, then deeper ones

    ImmersionWitness inner =
        extract_level(merged.graph, merged.colouring, t, budget, stats, depth + 1);
    return lift_witness(inner, g, combined);
}

} // namespace

ImmersionWitness extract_clique_immersion(const MultiGraph& g, const VertexColouring& f, int t,
                                          long long budget, ExtractStats* stats) {
    if (t < 1)
        throw GraphError("extract_clique_immersion needs t >= 1");
    if (!g.is_simple())
        throw GraphError("extract_clique_immersion expects a simple graph");
    if (Verdict v = verify_oddomorphism(g, f); !v)
        throw GraphError("colouring is not a valid oddomorphism: " + v.message);
    if (f.colour_count < required_colours(t))
        throw GraphError("need at least " + std::to_string(required_colours(t)) +
                         " colours for t=" + std::to_string(t) + ", got " +
                         std::to_string(f.colour_count));

    if (t == 1) {
        if (g.vertex_count() == 0)
            throw GraphError("cannot place a single branch vertex in an empty graph");
        ImmersionWitness w;
        w.pattern = complete_graph(1);
        w.host = g;
        w.branch[1] = *g.vertices().begin();
        return w;
    }
    if (t == 2) {
        // Any edge carries the immersion; the colour demand guarantees one.
        if (g.edge_count() == 0)
            throw PipelineError("no edge available despite a 21-colour oddomorphism");
        auto [e, ends] = *g.edges().begin();
        ImmersionWitness w;
        w.pattern = complete_graph(2);
        w.host = g;
        w.branch[1] = ends.first;
        w.branch[2] = ends.second;
        EdgePath route;
        route.start = ends.first;
        route.edges.push_back(e);
        w.routes[w.pattern.edges().begin()->first] = route;
        Verdict check = verify_immersion(w);
        if (!check)
            throw PipelineError("direct K_2 witness fails verification: " + check.message);
        return w;
    }

    ImmersionWitness w = extract_level(g, f, t, budget, stats, 0);
    if (Verdict check = verify_immersion(w); !check)
        throw PipelineError("extracted witness fails verification: " + check.message);
    if (!(w.host == g))
        throw PipelineError("extracted witness is not anchored to the input graph");
    return w;
}

} // namespace oddmorph
