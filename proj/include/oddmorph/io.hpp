#pragma once

#include <iosfwd>
#include <string>

#include "oddmorph/colouring.hpp"
#include "oddmorph/immersion.hpp"
#include "oddmorph/multigraph.hpp"
#include "oddmorph/treewidth.hpp"

namespace oddmorph {

// Line-oriented text formats with strict grammars: '#' comment lines are
// ignored, counts must match exactly, ids must be in range, and trailing
// content is an error. Emitted files re-parse to equal values; emitting is
// only defined for graphs whose vertices are exactly 1..n.

// "p graph <n> <m>" then m lines "e <u> <v>"; edge ids are the 1-based
// position among the e-lines.
MultiGraph parse_graph(std::istream& in, const std::string& filename = "<input>");
MultiGraph parse_graph_file(const std::string& path);
std::string format_graph(const MultiGraph& g);

// "p colouring <n> <t>" then n lines "c <v> <colour>".
VertexColouring parse_colouring(std::istream& in, const std::string& filename = "<input>");
VertexColouring parse_colouring_file(const std::string& path);
std::string format_colouring(const VertexColouring& f);

// "s td <bags> <width+1> <n>" then bag lines "b <id> <v...>" and tree edges
// "e <a> <b>".
TreeDecomposition parse_tree_decomposition(std::istream& in,
                                           const std::string& filename = "<input>");
TreeDecomposition parse_tree_decomposition_file(const std::string& path);
std::string format_tree_decomposition(const TreeDecomposition& td, int n);

// Witness JSON: {"pattern": {"n": ..., "edges": [[u,v],...]},
// "branch": {"<pv>": hv}, "routes": {"<pe>": [hostEdgeIds]}}. The host graph
// travels separately; import re-anchors the witness against it.
std::string format_witness(const ImmersionWitness& w);
ImmersionWitness parse_witness(const std::string& json_text, const MultiGraph& host,
                               const std::string& filename = "<input>");
ImmersionWitness parse_witness_file(const std::string& path, const MultiGraph& host);

// Operation logs serialize to a JSON array for trace output.
std::string format_operation_log(const OperationLog& log);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace oddmorph
