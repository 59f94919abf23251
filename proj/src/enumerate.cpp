#include "oddmorph/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace oddmorph {

namespace {

constexpr int kMaxCanonVertices = 16;

struct DenseGraph {
    int n = 0;
    std::array<std::array<uint8_t, kMaxCanonVertices>, kMaxCanonVertices> m{};

    static DenseGraph from(const MultiGraph& g) {
        if (g.vertex_count() > kMaxCanonVertices)
            throw GraphError("canonical form supports at most " +
                             std::to_string(kMaxCanonVertices) + " vertices");
        DenseGraph d;
        d.n = g.vertex_count();
        std::map<VertexId, int> idx;
        int i = 0;
        for (VertexId v : g.vertices())
            idx[v] = i++;
        for (const auto& [e, ends] : g.edges()) {
            int a = idx[ends.first], b = idx[ends.second];
            if (d.m[a][b] < 255) {
                ++d.m[a][b];
                ++d.m[b][a];
            }
        }
        return d;
    }

    MultiGraph to_multigraph() const {
        MultiGraph g = MultiGraph::with_vertices(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < m[i][j]; ++k)
                    g.add_edge(i + 1, j + 1);
        return g;
    }
};

struct CanonSearch {
    const DenseGraph& g;
    std::vector<int> placed;
    std::vector<bool> used;
    std::string code;
    std::string best;
    bool have_best = false;

    explicit CanonSearch(const DenseGraph& graph) : g(graph), used(graph.n, false) {}

    // u and v are interchangeable when they relate identically to everything
    // else; exploring both would walk the same subtree twice.
    bool twin(int u, int v) const {
        for (int w = 0; w < g.n; ++w) {
            if (w == u || w == v)
                continue;
            if (g.m[u][w] != g.m[v][w])
                return false;
        }
        return true;
    }

    void run() {
        if (g.n == 0) {
            best.clear();
            return;
        }
        descend();
    }

    void descend() {
        int pos = static_cast<int>(placed.size());
        if (pos == g.n) {
            if (!have_best || code > best) {
                best = code;
                have_best = true;
            }
            return;
        }
        // Rank candidates by the row they would contribute; only maximal
        // rows can start a lexicographically maximal completion.
        std::vector<int> candidates;
        std::string max_row;
        std::vector<std::string> rows(g.n);
        for (int v = 0; v < g.n; ++v) {
            if (used[v])
                continue;
            std::string row(pos, '\0');
            for (int i = 0; i < pos; ++i)
                row[i] = static_cast<char>(g.m[v][placed[i]]);
            rows[v] = row;
            if (candidates.empty() || row > max_row) {
                max_row = row;
                candidates.assign(1, v);
            } else if (row == max_row) {
                candidates.push_back(v);
            }
        }
        // Twin pruning among the survivors.
        std::vector<int> kept;
        for (int v : candidates) {
            bool duplicate = false;
            for (int u : kept)
                if (twin(u, v)) {
                    duplicate = true;
                    break;
                }
            if (!duplicate)
                kept.push_back(v);
        }
        for (int v : kept) {
            // A branch whose prefix already trails the best cannot win.
            std::size_t at = code.size();
            code += rows[v];
            if (have_best) {
                int cmp = code.compare(0, code.size(), best, 0, code.size());
                if (cmp < 0) {
                    code.resize(at);
                    continue;
                }
            }
            placed.push_back(v);
            used[v] = true;
            descend();
            used[v] = false;
            placed.pop_back();
            code.resize(at);
        }
    }
};

std::string canonical_code(const DenseGraph& g) {
    CanonSearch s(g);
    s.run();
    return s.best;
}

DenseGraph from_code(int n, const std::string& code) {
    DenseGraph d;
    d.n = n;
    std::size_t at = 0;
    for (int pos = 1; pos < n; ++pos)
        for (int i = 0; i < pos; ++i) {
            uint8_t mult = static_cast<uint8_t>(code[at++]);
            d.m[pos][i] = mult;
            d.m[i][pos] = mult;
        }
    return d;
}

} // namespace

CanonicalKey canonical_key(const MultiGraph& g) {
    DenseGraph d = DenseGraph::from(g);
    return {d.n, canonical_code(d)};
}

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_key(a) == canonical_key(b);
}

bool is_connected(const MultiGraph& g) {
    if (g.vertex_count() == 0)
        return true;
    std::set<VertexId> seen{*g.vertices().begin()};
    std::vector<VertexId> stack{*g.vertices().begin()};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbours(v))
            if (seen.insert(w).second)
                stack.push_back(w);
    }
    return seen.size() == g.vertices().size();
}

std::vector<MultiGraph> all_graphs_up_to(int n) {
    if (n > 6)
        throw GraphError("all_graphs_up_to enumerates edge subsets; limit is 6 vertices");
    std::vector<MultiGraph> out;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                pairs.push_back({i, j});
        std::set<std::string> seen;
        std::vector<std::string> codes;
        for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            DenseGraph d;
            d.n = k;
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (mask & (1u << p)) {
                    d.m[pairs[p].first][pairs[p].second] = 1;
                    d.m[pairs[p].second][pairs[p].first] = 1;
                }
            std::string code = canonical_code(d);
            if (seen.insert(code).second)
                codes.push_back(code);
        }
        std::sort(codes.begin(), codes.end());
        for (const std::string& code : codes)
            out.push_back(from_code(k, code).to_multigraph());
    }
    return out;
}

namespace {

// Grow a family level by level: extend every member of level k with one new
// vertex, keep one representative per canonical code. Every connected graph
// (tree) on k+1 vertices arises this way from one on k vertices, so each
// level is exhaustive.
std::vector<MultiGraph> grow_by_levels(int max_n,
                                       std::vector<DenseGraph> (*extensions)(const DenseGraph&)) {
    std::vector<MultiGraph> out;
    std::vector<DenseGraph> level;
    DenseGraph single;
    single.n = 1;
    level.push_back(single);
    out.push_back(single.to_multigraph());
    for (int k = 2; k <= max_n; ++k) {
        std::set<std::string> seen;
        std::vector<std::string> codes;
        for (const DenseGraph& g : level)
            for (const DenseGraph& cand : extensions(g)) {
                std::string code = canonical_code(cand);
                if (seen.insert(code).second)
                    codes.push_back(code);
            }
        std::sort(codes.begin(), codes.end());
        level.clear();
        for (const std::string& code : codes) {
            level.push_back(from_code(k, code));
            out.push_back(level.back().to_multigraph());
        }
    }
    return out;
}

std::vector<DenseGraph> connected_extensions(const DenseGraph& g) {
    std::vector<DenseGraph> out;
    for (uint32_t nb = 1; nb < (1u << g.n); ++nb) {
        DenseGraph h = g;
        h.n = g.n + 1;
        for (int i = 0; i < g.n; ++i)
            if (nb & (1u << i)) {
                h.m[g.n][i] = 1;
                h.m[i][g.n] = 1;
            }
        out.push_back(h);
    }
    return out;
}

std::vector<DenseGraph> leaf_extensions(const DenseGraph& g) {
    std::vector<DenseGraph> out;
    for (int i = 0; i < g.n; ++i) {
        DenseGraph h = g;
        h.n = g.n + 1;
        h.m[g.n][i] = 1;
        h.m[i][g.n] = 1;
        out.push_back(h);
    }
    return out;
}

} // namespace

std::vector<MultiGraph> connected_graphs_up_to(int n) {
    if (n > 8)
        throw GraphError("connected_graphs_up_to is tuned for at most 8 vertices");
    return grow_by_levels(n, connected_extensions);
}

std::vector<MultiGraph> trees_up_to(int n) {
    if (n > 10)
        throw GraphError("trees_up_to is tuned for at most 10 vertices");
    return grow_by_levels(n, leaf_extensions);
}

} // namespace oddmorph
