// Command-line front end: every toolkit operation behind one binary with
// strict file formats. Exit codes: 0 affirmative, 1 negative verdict,
// 2 usage or parse error, 3 budget exhausted.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddmorph/enumerate.hpp"
#include "oddmorph/extract.hpp"
#include "oddmorph/homcount.hpp"
#include "oddmorph/io.hpp"
#include "oddmorph/treewidth.hpp"

using namespace oddmorph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

long long default_budget() {
    if (const char* env = std::getenv("ODDMORPH_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw GraphError("ODDMORPH_BUDGET is not a number: " + std::string(env));
        }
    }
    return 2'000'000'000LL;
}

std::string verdict_detail(const Verdict& v) {
    nlohmann::json j;
    j["code"] = v.code;
    j["message"] = v.message;
    for (const auto& [key, value] : v.detail)
        j[key] = value;
    return j.dump();
}

int report_verdict(const Verdict& v) {
    if (v) {
        std::cout << "VALID\n";
        return kExitOk;
    }
    std::cout << "INVALID " << v.code << "\n" << verdict_detail(v) << "\n";
    return kExitNegative;
}

// Graph names for `generate`: K7, C6, P4, K3,3 and multiples like 2K3.
MultiGraph named_graph(const std::string& name) {
    std::size_t at = 0;
    int copies = 1;
    if (at < name.size() && std::isdigit(static_cast<unsigned char>(name[at]))) {
        std::size_t used = 0;
        copies = std::stoi(name.substr(at), &used);
        at += used;
    }
    if (at >= name.size() || copies < 1)
        throw GraphError("cannot parse graph name '" + name + "'");
    char kind = name[at++];
    std::size_t used = 0;
    if (at >= name.size())
        throw GraphError("cannot parse graph name '" + name + "'");
    int n = std::stoi(name.substr(at), &used);
    at += used;
    MultiGraph base;
    if (kind == 'K' && at < name.size() && name[at] == ',') {
        int b = std::stoi(name.substr(at + 1), &used);
        at += 1 + used;
        base = complete_bipartite(n, b);
    } else if (kind == 'K') {
        base = complete_graph(n);
    } else if (kind == 'C') {
        base = cycle_graph(n);
    } else if (kind == 'P') {
        base = path_graph(n);
    } else {
        throw GraphError("unknown graph kind '" + std::string(1, kind) + "' in '" + name + "'");
    }
    if (at != name.size())
        throw GraphError("trailing characters in graph name '" + name + "'");
    MultiGraph out = base;
    for (int c = 1; c < copies; ++c)
        out = disjoint_union(out, base);
    return out;
}

FamilySpec family_from_flags(const std::string& family, int max_size) {
    if (family == "trees")
        return FamilySpec::trees(max_size);
    if (family == "cycles")
        return FamilySpec::cycles(max_size);
    if (family == "paths")
        return FamilySpec::paths(max_size);
    if (family == "all")
        return FamilySpec::all(max_size);
    throw GraphError("unknown family '" + family + "' (trees|cycles|paths|all)");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraph toolkit: oddomorphisms, immersions, treewidth, homomorphism counts"};
    app.set_version_flag("--version", std::string("oddmorph ") + ODDMORPH_VERSION);
    app.require_subcommand(1);

    std::string graph_path, colouring_path, witness_path, pattern_path, out_path;
    std::string source_path, target_path, g_path, h_path, decomposition_path, trace_path;
    std::string method = "td", family = "trees", graph_name;
    int t = 0, max_size = 0, cap = 18;
    long long budget = -1;

    auto budget_or_default = [&]() { return budget >= 0 ? budget : default_budget(); };

    auto* generate = app.add_subcommand("generate", "emit a named graph as a graph file");
    generate->add_option("--graph", graph_name, "name like K7, C6, P4, K3,3, 2K3")->required();
    generate->add_option("--out", out_path, "output path (default stdout)");
    std::string identity_out;
    generate->add_option("--identity-colouring", identity_out,
                         "also write the identity colouring of the generated graph");

    auto* verify_odd = app.add_subcommand("verify-odd", "check a colouring file");
    verify_odd->add_option("--graph", graph_path)->required();
    verify_odd->add_option("--colouring", colouring_path)->required();

    auto* search_odd = app.add_subcommand("search-odd", "search for a valid t-colouring");
    search_odd->add_option("--graph", graph_path)->required();
    search_odd->add_option("-t", t, "colour count")->required();
    search_odd->add_option("--out", out_path);
    search_odd->add_option("--budget", budget);

    auto* verify_imm = app.add_subcommand("verify-immersion", "check a witness file");
    verify_imm->add_option("--graph", graph_path)->required();
    verify_imm->add_option("--witness", witness_path)->required();

    auto* find_imm = app.add_subcommand("find-immersion", "search for an immersion witness");
    find_imm->add_option("--graph", graph_path)->required();
    find_imm->add_option("--pattern", pattern_path)->required();
    find_imm->add_option("--out", out_path);
    find_imm->add_option("--budget", budget);

    auto* extract = app.add_subcommand("extract-immersion",
                                       "extract a clique immersion from a colouring");
    extract->add_option("--graph", graph_path)->required();
    extract->add_option("--colouring", colouring_path)->required();
    extract->add_option("-t", t, "clique size")->required();
    extract->add_option("--out", out_path);
    extract->add_option("--trace", trace_path);
    extract->add_option("--budget", budget);

    auto* tw = app.add_subcommand("treewidth", "exact treewidth");
    tw->add_option("--graph", graph_path)->required();
    tw->add_option("--decomposition", decomposition_path);
    tw->add_option("--cap", cap, "vertex cap for the subset table");

    auto* verify_td = app.add_subcommand("verify-td", "check a decomposition file");
    verify_td->add_option("--graph", graph_path)->required();
    verify_td->add_option("--decomposition", decomposition_path)->required();

    auto* homcount = app.add_subcommand("homcount", "count homomorphisms source -> target");
    homcount->add_option("--source", source_path)->required();
    homcount->add_option("--target", target_path)->required();
    homcount->add_option("--method", method, "brute|td");

    auto* dist = app.add_subcommand("distinguish",
                                    "search a family for different homomorphism counts");
    dist->set_help_flag("--help"); // frees -h for the second graph below
    dist->add_option("--g", g_path)->required();
    dist->add_option("--h", h_path)->required();
    dist->add_option("--family", family, "trees|cycles|paths|all")->required();
    dist->add_option("--max-size", max_size, "largest member vertex count")->required();
    dist->add_option("--out", out_path);

    auto* bound = app.add_subcommand("check-tw-bound",
                                     "treewidth lower bound from a valid colouring");
    bound->add_option("--graph", graph_path)->required();
    bound->add_option("--colouring", colouring_path)->required();
    bound->add_option("--cap", cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) {
            MultiGraph g = named_graph(graph_name);
            emit(out_path, format_graph(g));
            if (!identity_out.empty())
                write_file(identity_out, format_colouring(identity_colouring(g)));
            return kExitOk;
        }
        if (*verify_odd) {
            MultiGraph g = parse_graph_file(graph_path);
            VertexColouring f = parse_colouring_file(colouring_path);
            return report_verdict(verify_oddomorphism(g, f));
        }
        if (*search_odd) {
            MultiGraph g = parse_graph_file(graph_path);
            auto r = search_oddomorphism(g, t, budget_or_default());
            if (r.status == SearchStatus::BudgetExceeded) {
                std::cout << "BUDGET EXHAUSTED after " << r.nodes << " nodes\n";
                return kExitBudget;
            }
            if (!r.found()) {
                std::cout << "NONE\n";
                return kExitNegative;
            }
            emit(out_path, format_colouring(*r.colouring));
            return kExitOk;
        }
        if (*verify_imm) {
            MultiGraph g = parse_graph_file(graph_path);
            ImmersionWitness w = parse_witness_file(witness_path, g);
            return report_verdict(verify_immersion(w));
        }
        if (*find_imm) {
            MultiGraph g = parse_graph_file(graph_path);
            MultiGraph pattern = parse_graph_file(pattern_path);
            auto r = find_immersion(g, pattern, budget_or_default());
            if (r.budget_exhausted) {
                std::cout << "BUDGET EXHAUSTED after " << r.nodes << " nodes\n";
                return kExitBudget;
            }
            if (!r.found) {
                std::cout << "NONE\n";
                return kExitNegative;
            }
            emit(out_path, format_witness(*r.witness));
            return kExitOk;
        }
        if (*extract) {
            MultiGraph g = parse_graph_file(graph_path);
            VertexColouring f = parse_colouring_file(colouring_path);
            ExtractStats stats;
            ImmersionWitness w = extract_clique_immersion(g, f, t, budget_or_default(), &stats);
            emit(out_path, format_witness(w));
            if (!trace_path.empty())
                write_file(trace_path, format_operation_log(stats.trace));
            std::cerr << "extracted K_" << t << ": depth " << stats.recursion_depth
                      << ", mergers " << stats.mergers << ", base case at depth "
                      << stats.base_case_depth << "\n";
            return kExitOk;
        }
        if (*tw) {
            MultiGraph g = parse_graph_file(graph_path);
            TreewidthResult r = exact_treewidth(g, cap);
            std::cout << "treewidth " << r.width << "\n";
            if (!decomposition_path.empty())
                write_file(decomposition_path,
                           format_tree_decomposition(r.decomposition, g.vertex_count()));
            return kExitOk;
        }
        if (*verify_td) {
            MultiGraph g = parse_graph_file(graph_path);
            TreeDecomposition td = parse_tree_decomposition_file(decomposition_path);
            return report_verdict(verify_tree_decomposition(g, td));
        }
        if (*homcount) {
            MultiGraph source = parse_graph_file(source_path);
            MultiGraph target = parse_graph_file(target_path);
            BigUint count;
            if (method == "brute")
                count = hom_count_bruteforce(source, target);
            else if (method == "td")
                count = hom_count_td(source, target);
            else
                throw GraphError("unknown method '" + method + "' (brute|td)");
            std::cout << count.to_string() << "\n";
            return kExitOk;
        }
        if (*dist) {
            MultiGraph g = parse_graph_file(g_path);
            MultiGraph h = parse_graph_file(h_path);
            DistinguishResult r = distinguish(g, h, family_from_flags(family, max_size));
            if (!r.distinguisher) {
                std::cout << "INDISTINGUISHABLE (bound=" << max_size << ")\n";
                return kExitNegative;
            }
            std::cout << "DISTINGUISHED counts " << r.count_g.to_string() << " vs "
                      << r.count_h.to_string() << "\n";
            emit(out_path, format_graph(*r.distinguisher));
            return kExitOk;
        }
        if (*bound) {
            MultiGraph g = parse_graph_file(graph_path);
            VertexColouring f = parse_colouring_file(colouring_path);
            TreewidthBoundCheck r = check_oddomorphism_treewidth_bound(g, f, cap);
            if (r.holds) {
                std::cout << "OK treewidth " << r.width << " >= " << r.colours - 1 << "\n";
                return kExitOk;
            }
            std::cout << "VIOLATION treewidth " << r.width << " < " << r.colours - 1 << "\n";
            return kExitNegative;
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
