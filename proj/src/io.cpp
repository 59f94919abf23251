#include "oddmorph/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oddmorph {

namespace {

using nlohmann::json;

struct LineReader {
    std::istream& in;
    std::string filename;
    int line_no = 0;

    // Next significant line, skipping '#' comments. Returns false at EOF.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (!line.empty() && line[0] == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(filename, line_no, expected);
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok)
        out.push_back(tok);
    return out;
}

int parse_int(LineReader& r, const std::string& tok, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    bool ok = true;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        ok = false;
    }
    if (!ok || used != tok.size())
        r.fail("expected " + what + ", got '" + tok + "'");
    return v;
}

void expect_eof(LineReader& r) {
    std::string extra;
    if (r.next(extra) && !split_ws(extra).empty())
        r.fail("expected end of file, got '" + extra + "'");
}

} // namespace

MultiGraph parse_graph(std::istream& in, const std::string& filename) {
    LineReader r{in, filename};
    std::string line;
    if (!r.next(line))
        r.fail("expected header 'p graph <n> <m>'");
    auto head = split_ws(line);
    if (head.size() != 4 || head[0] != "p" || head[1] != "graph")
        r.fail("expected header 'p graph <n> <m>'");
    int n = parse_int(r, head[2], "vertex count");
    int m = parse_int(r, head[3], "edge count");
    if (n < 0 || m < 0)
        r.fail("counts must be non-negative");
    MultiGraph g = MultiGraph::with_vertices(n);
    for (int i = 0; i < m; ++i) {
        if (!r.next(line))
            r.fail("expected edge line " + std::to_string(i + 1) + " of " + std::to_string(m));
        auto tok = split_ws(line);
        if (tok.size() != 3 || tok[0] != "e")
            r.fail("expected 'e <u> <v>'");
        int u = parse_int(r, tok[1], "vertex id");
        int v = parse_int(r, tok[2], "vertex id");
        if (u < 1 || u > n || v < 1 || v > n)
            r.fail("vertex id out of range 1.." + std::to_string(n));
        if (u == v)
            r.fail("loops are not allowed");
        g.add_edge(u, v);
    }
    expect_eof(r);
    return g;
}

std::string format_graph(const MultiGraph& g) {
    int n = g.vertex_count();
    for (VertexId v : g.vertices())
        if (v < 1 || v > n)
            throw GraphError("graph vertices are not 1.." + std::to_string(n) +
                             "; relabel before emitting");
    std::ostringstream out;
    out << "p graph " << n << " " << g.edge_count() << "\n";
    for (const auto& [e, ends] : g.edges())
        out << "e " << ends.first << " " << ends.second << "\n";
    return out.str();
}

VertexColouring parse_colouring(std::istream& in, const std::string& filename) {
    LineReader r{in, filename};
    std::string line;
    if (!r.next(line))
        r.fail("expected header 'p colouring <n> <t>'");
    auto head = split_ws(line);
    if (head.size() != 4 || head[0] != "p" || head[1] != "colouring")
        r.fail("expected header 'p colouring <n> <t>'");
    int n = parse_int(r, head[2], "vertex count");
    int t = parse_int(r, head[3], "colour count");
    if (n < 0 || t < 0)
        r.fail("counts must be non-negative");
    VertexColouring f;
    f.colour_count = t;
    for (int i = 0; i < n; ++i) {
        if (!r.next(line))
            r.fail("expected colour line " + std::to_string(i + 1) + " of " + std::to_string(n));
        auto tok = split_ws(line);
        if (tok.size() != 3 || tok[0] != "c")
            r.fail("expected 'c <v> <colour>'");
        int v = parse_int(r, tok[1], "vertex id");
        int c = parse_int(r, tok[2], "colour");
        if (v < 1 || v > n)
            r.fail("vertex id out of range 1.." + std::to_string(n));
        if (c < 1 || c > t)
            r.fail("colour out of range 1.." + std::to_string(t));
        if (f.assignment.count(v))
            r.fail("vertex " + std::to_string(v) + " coloured twice");
        f.assignment[v] = c;
    }
    expect_eof(r);
    return f;
}

std::string format_colouring(const VertexColouring& f) {
    std::ostringstream out;
    out << "p colouring " << f.assignment.size() << " " << f.colour_count << "\n";
    for (const auto& [v, c] : f.assignment)
        out << "c " << v << " " << c << "\n";
    return out.str();
}

TreeDecomposition parse_tree_decomposition(std::istream& in, const std::string& filename) {
    LineReader r{in, filename};
    std::string line;
    if (!r.next(line))
        r.fail("expected header 's td <bags> <width+1> <n>'");
    auto head = split_ws(line);
    if (head.size() != 5 || head[0] != "s" || head[1] != "td")
        r.fail("expected header 's td <bags> <width+1> <n>'");
    int bags = parse_int(r, head[2], "bag count");
    int width_plus_1 = parse_int(r, head[3], "width+1");
    int n = parse_int(r, head[4], "vertex count");
    if (bags < 1)
        r.fail("a decomposition needs at least one bag");
    TreeDecomposition td;
    for (int i = 0; i < bags; ++i) {
        if (!r.next(line))
            r.fail("expected bag line " + std::to_string(i + 1) + " of " + std::to_string(bags));
        auto tok = split_ws(line);
        if (tok.size() < 2 || tok[0] != "b")
            r.fail("expected 'b <bagId> <v...>'");
        int id = parse_int(r, tok[1], "bag id");
        if (id < 1 || id > bags)
            r.fail("bag id out of range 1.." + std::to_string(bags));
        if (td.bags.count(id))
            r.fail("bag " + std::to_string(id) + " defined twice");
        td.tree.add_vertex(id);
        std::set<VertexId>& bag = td.bags[id];
        for (std::size_t k = 2; k < tok.size(); ++k) {
            int v = parse_int(r, tok[k], "vertex id");
            if (v < 1 || v > n)
                r.fail("vertex id out of range 1.." + std::to_string(n));
            if (static_cast<int>(bag.size()) >= width_plus_1)
                r.fail("bag " + std::to_string(id) + " exceeds the declared width");
            bag.insert(v);
        }
    }
    for (int i = 0; i < bags - 1; ++i) {
        if (!r.next(line))
            r.fail("expected " + std::to_string(bags - 1) + " tree edge lines");
        auto tok = split_ws(line);
        if (tok.size() != 3 || tok[0] != "e")
            r.fail("expected 'e <b1> <b2>'");
        int a = parse_int(r, tok[1], "bag id");
        int b = parse_int(r, tok[2], "bag id");
        if (a < 1 || a > bags || b < 1 || b > bags)
            r.fail("bag id out of range 1.." + std::to_string(bags));
        td.tree.add_edge(a, b);
    }
    expect_eof(r);
    return td;
}

std::string format_tree_decomposition(const TreeDecomposition& td, int n) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << n << "\n";
    for (const auto& [id, bag] : td.bags) {
        out << "b " << id;
        for (VertexId v : bag)
            out << " " << v;
        out << "\n";
    }
    for (const auto& [e, ends] : td.tree.edges())
        out << "e " << ends.first << " " << ends.second << "\n";
    return out.str();
}

std::string format_witness(const ImmersionWitness& w) {
    json doc;
    json pattern;
    pattern["n"] = w.pattern.vertex_count();
    json edges = json::array();
    for (const auto& [e, ends] : w.pattern.edges())
        edges.push_back({ends.first, ends.second});
    pattern["edges"] = std::move(edges);
    doc["pattern"] = std::move(pattern);
    json branch = json::object();
    for (const auto& [pv, hv] : w.branch)
        branch[std::to_string(pv)] = hv;
    doc["branch"] = std::move(branch);
    json routes = json::object();
    for (const auto& [pe, route] : w.routes)
        routes[std::to_string(pe)] = route.edges;
    doc["routes"] = std::move(routes);
    return doc.dump(2) + "\n";
}

ImmersionWitness parse_witness(const std::string& json_text, const MultiGraph& host,
                               const std::string& filename) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(filename, 0, std::string("invalid JSON: ") + e.what());
    }
    try {
        ImmersionWitness w;
        w.host = host;
        int n = doc.at("pattern").at("n").get<int>();
        w.pattern = MultiGraph::with_vertices(n);
        for (const auto& pair : doc.at("pattern").at("edges"))
            w.pattern.add_edge(pair.at(0).get<int>(), pair.at(1).get<int>());
        for (const auto& [key, value] : doc.at("branch").items())
            w.branch[std::stoi(key)] = value.get<int>();
        for (const auto& [key, value] : doc.at("routes").items()) {
            EdgeId pe = std::stoi(key);
            EdgePath route;
            route.edges = value.get<std::vector<int>>();
            if (!w.pattern.has_edge(pe))
                throw ParseError(filename, 0,
                                 "route names unknown pattern edge " + std::to_string(pe));
            // Orient the edge list from the branch image of the pattern
            // edge's smaller endpoint; fall back to the other end.
            auto ends = w.pattern.endpoints(pe);
            VertexId a = w.branch.count(ends.first) ? w.branch.at(ends.first) : 0;
            VertexId b = w.branch.count(ends.second) ? w.branch.at(ends.second) : 0;
            route.start = a;
            bool ok = false;
            for (VertexId start : {a, b}) {
                if (start == 0)
                    continue;
                route.start = start;
                try {
                    path_vertices(host, route);
                    ok = true;
                    break;
                } catch (const GraphError&) {
                }
            }
            if (!ok)
                throw ParseError(filename, 0,
                                 "route for pattern edge " + std::to_string(pe) +
                                     " is not walkable from either branch vertex");
            w.routes[pe] = std::move(route);
        }
        return w;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(filename, 0, std::string("witness shape: ") + e.what());
    }
}

std::string format_operation_log(const OperationLog& log) {
    json arr = json::array();
    for (const LogEntry& entry : log.entries) {
        json item;
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, SplitOffEntry>) {
                    item["op"] = "split-off";
                    item["e1"] = e.e1;
                    item["e2"] = e.e2;
                    item["created"] = e.created;
                    item["created_ends"] = {e.created_ends.first, e.created_ends.second};
                } else if constexpr (std::is_same_v<T, CycleDeletedEntry>) {
                    item["op"] = "cycle-deleted";
                    json edges = json::array();
                    for (const auto& [id, ends] : e.edges)
                        edges.push_back(id);
                    item["edges"] = std::move(edges);
                } else if constexpr (std::is_same_v<T, EdgeRemovedEntry>) {
                    item["op"] = "edge-removed";
                    item["edge"] = e.e;
                } else if constexpr (std::is_same_v<T, VertexRemovedEntry>) {
                    item["op"] = "vertex-removed";
                    item["vertex"] = e.v;
                } else if constexpr (std::is_same_v<T, SimplifyKeptEntry>) {
                    item["op"] = "simplify-kept";
                    item["pair"] = {e.pair.first, e.pair.second};
                    item["kept"] = e.kept;
                    item["dropped"] = e.dropped;
                } else if constexpr (std::is_same_v<T, MergerEntry>) {
                    item["op"] = "merger";
                    item["u1"] = e.u1;
                    item["u2"] = e.u2;
                    item["merged"] = e.merged;
                    json pool = json::array();
                    for (const EdgePath& p : e.pool)
                        pool.push_back(p.edges);
                    item["pool"] = std::move(pool);
                    json deleted = json::array();
                    for (const auto& [id, ends] : e.deleted_edges)
                        deleted.push_back(id);
                    item["deleted"] = std::move(deleted);
                }
            },
            entry);
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

namespace {

template <typename T, typename Parser>
T parse_file_with(const std::string& path, Parser parser) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    return parser(in, path);
}

} // namespace

MultiGraph parse_graph_file(const std::string& path) {
    return parse_file_with<MultiGraph>(
        path, [](std::istream& in, const std::string& p) { return parse_graph(in, p); });
}

VertexColouring parse_colouring_file(const std::string& path) {
    return parse_file_with<VertexColouring>(
        path, [](std::istream& in, const std::string& p) { return parse_colouring(in, p); });
}

TreeDecomposition parse_tree_decomposition_file(const std::string& path) {
    return parse_file_with<TreeDecomposition>(path, [](std::istream& in, const std::string& p) {
        return parse_tree_decomposition(in, p);
    });
}

ImmersionWitness parse_witness_file(const std::string& path, const MultiGraph& host) {
    return parse_witness(read_file(path), host, path);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw GraphError("cannot write file " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace oddmorph
