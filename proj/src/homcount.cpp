#include "oddmorph/homcount.hpp"

#include <algorithm>
#include <map>

#include "oddmorph/enumerate.hpp"
#include "oddmorph/treewidth.hpp"

namespace oddmorph {

namespace {

double pow_estimate(int base, int exp) {
    double v = 1;
    for (int i = 0; i < exp; ++i)
        v *= base;
    return v;
}

} // namespace

BigUint hom_count_bruteforce(const MultiGraph& source_in, const MultiGraph& target_in,
                             long long budget) {
    MultiGraph source = simplify(source_in);
    MultiGraph target = simplify(target_in);
    int k = source.vertex_count();
    if (k == 0)
        return BigUint(1); // the empty map
    int n = target.vertex_count();
    if (n == 0)
        return BigUint(0);
    if (pow_estimate(n, k) > static_cast<double>(budget))
        throw BudgetError("hom_count_bruteforce: " + std::to_string(n) + "^" +
                          std::to_string(k) + " assignments exceed the budget");

    std::vector<VertexId> sv(source.vertices().begin(), source.vertices().end());
    std::vector<VertexId> tv(target.vertices().begin(), target.vertices().end());
    std::map<VertexId, int> s_index;
    for (int i = 0; i < k; ++i)
        s_index[sv[i]] = i;
    std::vector<std::pair<int, int>> constraints;
    for (const auto& [e, ends] : source.edges())
        constraints.push_back({s_index[ends.first], s_index[ends.second]});

    std::vector<int> digit(k, 0);
    BigUint total(0);
    unsigned long long run = 0;
    for (;;) {
        bool ok = true;
        for (auto [a, b] : constraints) {
            VertexId fu = tv[digit[a]], fv = tv[digit[b]];
            if (fu == fv || !target.adjacent(fu, fv)) {
                ok = false;
                break;
            }
        }
        if (ok)
            ++run;
        // odometer
        int pos = 0;
        while (pos < k && ++digit[pos] == n) {
            digit[pos] = 0;
            ++pos;
        }
        if (pos == k)
            break;
    }
    total += BigUint(run);
    return total;
}

// ---------------------------------------------------------------------------
// tree-decomposition counting
// ---------------------------------------------------------------------------

namespace {

struct NiceNode {
    enum class Kind { Leaf, Introduce, Forget, Join };
    Kind kind = Kind::Leaf;
    std::vector<VertexId> bag; // sorted source vertices
    int child1 = -1, child2 = -1;
    VertexId vertex = 0; // introduced or forgotten
};

struct NiceTree {
    std::vector<NiceNode> nodes;
    int root = -1;

    int add(NiceNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
};

std::vector<VertexId> sorted_bag(const std::set<VertexId>& s) {
    return {s.begin(), s.end()};
}

// Chain of Introduce nodes raising `from` to `to` (from ⊆ to).
int introduce_chain(NiceTree& t, int below, std::vector<VertexId> from,
                    const std::vector<VertexId>& to) {
    for (VertexId v : to) {
        if (std::binary_search(from.begin(), from.end(), v))
            continue;
        from.insert(std::lower_bound(from.begin(), from.end(), v), v);
        NiceNode n;
        n.kind = NiceNode::Kind::Introduce;
        n.bag = from;
        n.child1 = below;
        n.vertex = v;
        below = t.add(n);
    }
    return below;
}

// Chain of Forget nodes lowering `from` to keep ⊆ from.
int forget_chain(NiceTree& t, int below, std::vector<VertexId> from,
                 const std::vector<VertexId>& keep) {
    for (VertexId v : std::vector<VertexId>(from)) {
        if (std::binary_search(keep.begin(), keep.end(), v))
            continue;
        from.erase(std::find(from.begin(), from.end(), v));
        NiceNode n;
        n.kind = NiceNode::Kind::Forget;
        n.bag = from;
        n.child1 = below;
        n.vertex = v;
        below = t.add(n);
    }
    return below;
}

int build_nice(NiceTree& t, const TreeDecomposition& td, VertexId x, VertexId parent) {
    std::vector<VertexId> bag = sorted_bag(td.bags.at(x));
    std::vector<int> pieces;
    for (VertexId y : td.tree.neighbours(x)) {
        if (y == parent)
            continue;
        int sub = build_nice(t, td, y, x);
        std::vector<VertexId> child_bag = sorted_bag(td.bags.at(y));
        sub = forget_chain(t, sub, child_bag, bag);
        std::vector<VertexId> kept;
        std::set_intersection(child_bag.begin(), child_bag.end(), bag.begin(), bag.end(),
                              std::back_inserter(kept));
        sub = introduce_chain(t, sub, kept, bag);
        pieces.push_back(sub);
    }
    if (pieces.empty()) {
        NiceNode leaf;
        leaf.kind = NiceNode::Kind::Leaf;
        int below = t.add(leaf);
        return introduce_chain(t, below, {}, bag);
    }
    int acc = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        NiceNode join;
        join.kind = NiceNode::Kind::Join;
        join.bag = bag;
        join.child1 = acc;
        join.child2 = pieces[i];
        acc = t.add(join);
    }
    return acc;
}

struct TdCounter {
    const MultiGraph& source;
    const NiceTree& tree;
    std::vector<VertexId> tv; // target vertices
    const MultiGraph& target;

    std::size_t table_size(const std::vector<VertexId>& bag) const {
        std::size_t s = 1;
        for (std::size_t i = 0; i < bag.size(); ++i)
            s *= tv.size();
        return s;
    }

    std::vector<BigUint> eval(int node_idx) const {
        const NiceNode& node = tree.nodes[node_idx];
        switch (node.kind) {
        case NiceNode::Kind::Leaf: {
            return {BigUint(1)};
        }
        case NiceNode::Kind::Introduce: {
            std::vector<BigUint> child = eval(node.child1);
            const std::vector<VertexId>& bag = node.bag;
            std::size_t p =
                std::lower_bound(bag.begin(), bag.end(), node.vertex) - bag.begin();
            // Source neighbours of the introduced vertex inside the bag.
            std::vector<std::size_t> check;
            for (std::size_t i = 0; i < bag.size(); ++i)
                if (i != p && source.adjacent(node.vertex, bag[i]))
                    check.push_back(i);
            std::vector<BigUint> out(table_size(bag));
            std::vector<int> digits(bag.size(), 0);
            std::size_t m = tv.size();
            for (std::size_t idx = 0; idx < out.size(); ++idx) {
                // decode
                std::size_t rest = idx;
                for (std::size_t i = 0; i < bag.size(); ++i) {
                    digits[i] = static_cast<int>(rest % m);
                    rest /= m;
                }
                bool ok = true;
                for (std::size_t i : check) {
                    VertexId a = tv[digits[p]], b = tv[digits[i]];
                    if (a == b || !target.adjacent(a, b)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    continue;
                // child index: drop digit p
                std::size_t cidx = 0, mul = 1;
                for (std::size_t i = 0; i < bag.size(); ++i) {
                    if (i == p)
                        continue;
                    cidx += mul * digits[i];
                    mul *= m;
                }
                out[idx] = child[cidx];
            }
            return out;
        }
        case NiceNode::Kind::Forget: {
            std::vector<BigUint> child = eval(node.child1);
            const std::vector<VertexId>& child_bag = tree.nodes[node.child1].bag;
            std::size_t p =
                std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) -
                child_bag.begin();
            std::size_t m = tv.size();
            std::vector<BigUint> out(table_size(node.bag));
            std::vector<int> digits(child_bag.size(), 0);
            for (std::size_t cidx = 0; cidx < child.size(); ++cidx) {
                if (child[cidx].is_zero())
                    continue;
                std::size_t rest = cidx;
                for (std::size_t i = 0; i < child_bag.size(); ++i) {
                    digits[i] = static_cast<int>(rest % m);
                    rest /= m;
                }
                std::size_t idx = 0, mul = 1;
                for (std::size_t i = 0; i < child_bag.size(); ++i) {
                    if (i == p)
                        continue;
                    idx += mul * digits[i];
                    mul *= m;
                }
                out[idx] += child[cidx];
            }
            return out;
        }
        case NiceNode::Kind::Join: {
            std::vector<BigUint> left = eval(node.child1);
            std::vector<BigUint> right = eval(node.child2);
            std::vector<BigUint> out(left.size());
            for (std::size_t i = 0; i < left.size(); ++i)
                if (!left[i].is_zero() && !right[i].is_zero())
                    out[i] = left[i] * right[i];
            return out;
        }
        }
        throw GraphError("unreachable nice-node kind");
    }
};

constexpr std::size_t kTableLimit = std::size_t{1} << 24;

} // namespace

BigUint hom_count_td(const MultiGraph& source_in, const MultiGraph& target_in) {
    MultiGraph source = simplify(source_in);
    MultiGraph target = simplify(target_in);
    if (source.vertex_count() == 0)
        return BigUint(1);
    if (target.vertex_count() == 0)
        return BigUint(0);

    TreewidthResult tw = exact_treewidth(source);
    const TreeDecomposition& td = tw.decomposition;

    std::size_t m = target.vertices().size();
    std::size_t worst = 1;
    for (int i = 0; i <= tw.width + 1 && worst < kTableLimit; ++i)
        worst *= m;
    if (worst >= kTableLimit)
        throw BudgetError("hom_count_td: table of " + std::to_string(worst) +
                          " entries exceeds the limit");

    // Root anywhere, then forget everything above the root bag so the answer
    // is the single entry of an empty-bag table.
    NiceTree nice;
    VertexId root_bag = td.tree.vertices().empty() ? 0 : *td.tree.vertices().begin();
    int top = build_nice(nice, td, root_bag, 0);
    top = forget_chain(nice, top, sorted_bag(td.bags.at(root_bag)), {});
    nice.root = top;

    TdCounter counter{source, nice, {target.vertices().begin(), target.vertices().end()},
                      target};
    std::vector<BigUint> result = counter.eval(nice.root);
    return result.at(0);
}

// ---------------------------------------------------------------------------
// families and distinguishers
// ---------------------------------------------------------------------------

namespace {

void partitions_into(int total, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(total, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_into(total - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<MultiGraph> path_unions_up_to(int bound) {
    std::vector<std::pair<CanonicalKey, MultiGraph>> keyed;
    for (int total = 1; total <= bound; ++total) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_into(total, total, cur, parts);
        for (const auto& p : parts) {
            MultiGraph g = path_graph(p[0]);
            for (std::size_t i = 1; i < p.size(); ++i)
                g = disjoint_union(g, path_graph(p[i]));
            keyed.push_back({canonical_key(g), g});
        }
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<MultiGraph> out;
    for (auto& [k, g] : keyed)
        out.push_back(std::move(g));
    return out;
}

} // namespace

std::vector<MultiGraph> generate_family(const FamilySpec& fam) {
    switch (fam.kind) {
    case FamilySpec::Kind::Trees:
        if (fam.max_vertices > 10)
            throw GraphError("tree family bound too large (max 10)");
        return trees_up_to(fam.max_vertices);
    case FamilySpec::Kind::Cycles: {
        std::vector<MultiGraph> out;
        for (int k = 3; k <= fam.max_vertices; ++k)
            out.push_back(cycle_graph(k));
        return out;
    }
    case FamilySpec::Kind::Paths:
        if (fam.max_vertices > 12)
            throw GraphError("path-union family bound too large (max 12)");
        return path_unions_up_to(fam.max_vertices);
    case FamilySpec::Kind::All:
        if (fam.max_vertices > 6)
            throw GraphError("all-graphs family bound too large (max 6)");
        return all_graphs_up_to(fam.max_vertices);
    case FamilySpec::Kind::FileList:
        return fam.members;
    }
    throw GraphError("unknown family kind");
}

DistinguishResult distinguish(const MultiGraph& g, const MultiGraph& h, const FamilySpec& fam) {
    DistinguishResult result;
    for (const MultiGraph& f : generate_family(fam)) {
        ++result.members_checked;
        BigUint cg = hom_count_td(f, g);
        BigUint ch = hom_count_td(f, h);
        if (cg != ch) {
            result.distinguisher = f;
            result.count_g = cg;
            result.count_h = ch;
            return result;
        }
    }
    return result;
}

} // namespace oddmorph
