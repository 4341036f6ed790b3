#pragma once

#include <iosfwd>
#include <string>

#include "mrg/graphgen.hpp"

// DIMACS edge format ("p edge n m", "e u v", 1-indexed) plus a JSON sidecar
// {"n", "p", "r", "seed", "m"} carrying provenance.
namespace mrg::io {

void write_dimacs(std::ostream& out, const MarkovGraph& graph);
std::string to_dimacs(const MarkovGraph& graph);

/// Parses and validates: header present once, endpoints in range, no self-loops or repeated
/// edges (either orientation), edge count equal to the header's m.
MarkovGraph read_dimacs(std::istream& in);
MarkovGraph parse_dimacs(const std::string& text);

std::string sidecar_json(const MarkovGraph& graph);
/// Applies provenance from a sidecar; n and m must agree with the graph.
MarkovGraph attach_sidecar(const MarkovGraph& graph, const std::string& json_text);

void save_graph(const MarkovGraph& graph, const std::string& dimacs_path, const std::string& json_path);
/// Loads a DIMACS file; a sidecar is read when `json_path` is non-empty.
MarkovGraph load_graph(const std::string& dimacs_path, const std::string& json_path = {});

}  // namespace mrg::io
