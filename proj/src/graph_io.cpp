#include "mrg/graph_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace mrg::io {

void write_dimacs(std::ostream& out, const MarkovGraph& graph) {
  out << "c Markov random graph n=" << graph.vertex_count() << " p=" << graph.params().p
      << " r=" << graph.params().r << " seed=" << graph.seed_used() << '\n';
  out << "p edge " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const auto& [u, v] : graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const MarkovGraph& graph) {
  std::ostringstream out;
  write_dimacs(out, graph);
  return out.str();
}

MarkovGraph read_dimacs(std::istream& in) {
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::int64_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("dimacs line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      if (n >= 0) fail("duplicate problem line");
      if (!(ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0 || m < 0)
        fail("malformed problem line");
      edges.reserve(static_cast<std::size_t>(m));
    } else if (tag == "e") {
      if (n < 0) fail("edge before problem line");
      std::int64_t u = 0;
      std::int64_t v = 0;
      if (!(ls >> u >> v)) fail("malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n) fail("endpoint out of range");
      if (u == v) fail("self-loop");
      if (u > v) std::swap(u, v);
      const auto key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n + 1) +
                       static_cast<std::uint64_t>(v);
      if (!seen.insert(key).second) fail("repeated edge");
      edges.emplace_back(u - 1, v - 1);
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw std::runtime_error("dimacs: missing problem line");
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw std::runtime_error("dimacs: header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  GraphParams params;
  params.n = n;
  return MarkovGraph(n, edges, params);
}

MarkovGraph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

std::string sidecar_json(const MarkovGraph& graph) {
  nlohmann::ordered_json j;
  j["n"] = graph.vertex_count();
  j["p"] = graph.params().p;
  j["r"] = graph.params().r;
  j["seed"] = graph.seed_used();
  j["m"] = graph.edge_count();
  return j.dump(2) + "\n";
}

MarkovGraph attach_sidecar(const MarkovGraph& graph, const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  if (j.at("n").get<std::int64_t>() != graph.vertex_count() ||
      j.at("m").get<std::int64_t>() != graph.edge_count())
    throw std::runtime_error("sidecar: n/m disagree with the DIMACS file");
  GraphParams params;
  params.n = graph.vertex_count();
  params.p = j.at("p").get<double>();
  params.r = j.at("r").get<double>();
  params.seed = j.at("seed").get<std::uint64_t>();
  params.validate();
  const auto edges = graph.edges();
  return MarkovGraph(graph.vertex_count(), edges, params);
}

void save_graph(const MarkovGraph& graph, const std::string& dimacs_path, const std::string& json_path) {
  std::ofstream dimacs(dimacs_path);
  if (!dimacs) throw std::runtime_error("cannot open " + dimacs_path);
  write_dimacs(dimacs, graph);
  if (!json_path.empty()) {
    std::ofstream json(json_path);
    if (!json) throw std::runtime_error("cannot open " + json_path);
    json << sidecar_json(graph);
  }
}

MarkovGraph load_graph(const std::string& dimacs_path, const std::string& json_path) {
  std::ifstream dimacs(dimacs_path);
  if (!dimacs) throw std::runtime_error("cannot open " + dimacs_path);
  MarkovGraph graph = read_dimacs(dimacs);
  if (json_path.empty()) return graph;
  std::ifstream json(json_path);
  if (!json) throw std::runtime_error("cannot open " + json_path);
  const std::string text((std::istreambuf_iterator<char>(json)), std::istreambuf_iterator<char>());
  return attach_sidecar(graph, text);
}

}  // namespace mrg::io
