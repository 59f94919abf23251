// Python bindings for the main toolkit operations. Graphs cross the
// boundary as (n, edge list) pairs or as the text format; counts come back
// as decimal strings so arbitrary precision survives the trip.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "oddmorph/enumerate.hpp"
#include "oddmorph/extract.hpp"
#include "oddmorph/homcount.hpp"
#include "oddmorph/io.hpp"
#include "oddmorph/treewidth.hpp"

namespace py = pybind11;
using namespace oddmorph;

namespace {

MultiGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g = MultiGraph::with_vertices(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

VertexColouring colouring_from_map(int t, const std::map<int, int>& assignment) {
    VertexColouring f;
    f.colour_count = t;
    for (auto [v, c] : assignment)
        f.assignment[v] = c;
    return f;
}

py::dict verdict_to_dict(const Verdict& v) {
    py::dict d;
    d["ok"] = v.ok;
    d["code"] = v.code;
    d["message"] = v.message;
    for (const auto& [key, value] : v.detail)
        d[py::str(key)] = value;
    return d;
}

py::dict witness_to_dict(const ImmersionWitness& w) {
    py::dict d;
    std::vector<std::pair<int, int>> pattern_edges;
    for (const auto& [e, ends] : w.pattern.edges())
        pattern_edges.push_back(ends);
    d["pattern_n"] = w.pattern.vertex_count();
    d["pattern_edges"] = pattern_edges;
    d["branch"] = w.branch;
    py::dict routes;
    for (const auto& [pe, route] : w.routes)
        routes[py::int_(pe)] = route.edges;
    d["routes"] = routes;
    d["json"] = format_witness(w);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "multigraph toolkit: oddomorphisms, immersions, treewidth, homomorphism counts";
    m.attr("__version__") = ODDMORPH_VERSION;

    py::class_<MultiGraph>(m, "MultiGraph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return graph_from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_static("parse", [](const std::string& text) {
            std::istringstream in(text);
            return parse_graph(in, "<python>");
        })
        .def("format", &format_graph)
        .def("vertex_count", &MultiGraph::vertex_count)
        .def("edge_count", &MultiGraph::edge_count)
        .def("degree", &MultiGraph::degree)
        .def("neighbours", &MultiGraph::neighbours)
        .def("is_simple", &MultiGraph::is_simple)
        .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
        .def("__repr__", [](const MultiGraph& g) {
            return "MultiGraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("disjoint_union", &disjoint_union);

    m.def(
        "verify_oddomorphism",
        [](const MultiGraph& g, int t, const std::map<int, int>& colours) {
            return verdict_to_dict(verify_oddomorphism(g, colouring_from_map(t, colours)));
        },
        py::arg("graph"), py::arg("t"), py::arg("colours"));

    m.def(
        "search_oddomorphism",
        [](const MultiGraph& g, int t, long long budget) -> py::object {
            auto r = search_oddomorphism(g, t, budget);
            if (r.status == SearchStatus::BudgetExceeded)
                throw BudgetError("search budget exhausted");
            if (!r.found())
                return py::none();
            return py::cast(std::map<int, int>(r.colouring->assignment.begin(),
                                               r.colouring->assignment.end()));
        },
        py::arg("graph"), py::arg("t"), py::arg("budget") = 1'000'000'000LL);

    m.def(
        "find_immersion",
        [](const MultiGraph& host, const MultiGraph& pattern, long long budget) -> py::object {
            auto r = find_immersion(host, pattern, budget);
            if (r.budget_exhausted)
                throw BudgetError("immersion budget exhausted");
            if (!r.found)
                return py::none();
            return witness_to_dict(*r.witness);
        },
        py::arg("host"), py::arg("pattern"), py::arg("budget") = 2'000'000'000LL);

    m.def(
        "verify_immersion_json",
        [](const MultiGraph& host, const std::string& witness_json) {
            ImmersionWitness w = parse_witness(witness_json, host, "<python>");
            return verdict_to_dict(verify_immersion(w));
        },
        py::arg("host"), py::arg("witness_json"));

    m.def("required_colours", &required_colours);

    m.def(
        "extract_clique_immersion",
        [](const MultiGraph& g, int t, const std::map<int, int>& colours, int declared_colours,
           long long budget) {
            ExtractStats stats;
            ImmersionWitness w = extract_clique_immersion(
                g, colouring_from_map(declared_colours, colours), t, budget, &stats);
            py::dict d = witness_to_dict(w);
            d["recursion_depth"] = stats.recursion_depth;
            d["mergers"] = stats.mergers;
            d["min_degree_base_case"] = stats.min_degree_base_case;
            return d;
        },
        py::arg("graph"), py::arg("t"), py::arg("colours"), py::arg("declared_colours"),
        py::arg("budget") = 2'000'000'000LL);

    m.def(
        "exact_treewidth",
        [](const MultiGraph& g, int cap) {
            TreewidthResult r = exact_treewidth(g, cap);
            py::dict d;
            d["width"] = r.width;
            d["decomposition"] = format_tree_decomposition(r.decomposition, g.vertex_count());
            return d;
        },
        py::arg("graph"), py::arg("cap") = 18);

    m.def(
        "hom_count_str",
        [](const MultiGraph& source, const MultiGraph& target, const std::string& method) {
            if (method == "brute")
                return hom_count_bruteforce(source, target).to_string();
            return hom_count_td(source, target).to_string();
        },
        py::arg("source"), py::arg("target"), py::arg("method") = "td");

    m.def(
        "distinguish",
        [](const MultiGraph& g, const MultiGraph& h, const std::string& family,
           int max_size) -> py::object {
            FamilySpec spec;
            if (family == "trees")
                spec = FamilySpec::trees(max_size);
            else if (family == "cycles")
                spec = FamilySpec::cycles(max_size);
            else if (family == "paths")
                spec = FamilySpec::paths(max_size);
            else if (family == "all")
                spec = FamilySpec::all(max_size);
            else
                throw GraphError("unknown family '" + family + "'");
            DistinguishResult r = distinguish(g, h, spec);
            if (!r.distinguisher)
                return py::none();
            py::dict d;
            d["graph"] = *r.distinguisher;
            d["count_g"] = r.count_g.to_string();
            d["count_h"] = r.count_h.to_string();
            return d;
        },
        py::arg("g"), py::arg("h"), py::arg("family"), py::arg("max_size"));

    py::register_exception<GraphError>(m, "GraphError");
    py::register_exception<BudgetError>(m, "BudgetError");
    py::register_exception<ParseError>(m, "FormatError");
}
