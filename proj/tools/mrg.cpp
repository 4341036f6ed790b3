// mrg: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 usage or input error, 2 a built-in check failed,
// 3 the exact solver ran out of budget (only with --strict).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mrg/mrg.h"

namespace {

constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;
constexpr int kTimeout = 3;

struct Failure {
  int code;
  std::string message;
};

void check(mrg_status status, const char* what) {
  if (status != MRG_OK) throw Failure{kUsage, std::string(what) + ": " + mrg_last_error()};
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { mrg_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

using GraphPtr = std::unique_ptr<mrg_graph, decltype(&mrg_graph_free)>;
using ResultPtr = std::unique_ptr<mrg_result, decltype(&mrg_result_free)>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, "cannot open " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{kUsage, "cannot write " + path};
  out << text;
}

std::string csv_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sidecar_path(const std::string& dimacs) {
  const auto dot = dimacs.rfind('.');
  const auto slash = dimacs.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return dimacs.substr(0, dot) + ".json";
  return dimacs + ".json";
}

// Options shared by the subcommands. Strings keep "not given" distinguishable and let
// experiments accept comma-separated grids.
struct Common {
  std::string n, p, r, trials, seed, eps, budget, threads;
  std::string out;
  std::string format = "csv";
  std::string config;
  std::string graph;
  std::string sidecar;
  bool save_graphs = false;
  bool strict = false;
};

void add_model(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "Vertex count (experiments: comma-separated grid, a^b allowed)");
  cmd->add_option("--p", c.p, "Initial edge probability in (0,1]");
  cmd->add_option("--r", c.r, "Decay parameter in (0,1]");
  cmd->add_option("--seed", c.seed, "Master seed");
}

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out, "Output path (default: stdout)");
}

void add_graph_source(CLI::App* cmd, Common& c) {
  cmd->add_option("--graph", c.graph, "Read a DIMACS graph instead of sampling");
  cmd->add_option("--sidecar", c.sidecar, "JSON sidecar for --graph");
  cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

std::int64_t to_int(const std::string& s, std::int64_t fallback, const char* name) {
  if (s.empty()) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Failure{kUsage, std::string("--") + name + ": expected an integer, got '" + s + "'"};
}

std::uint64_t to_uint(const std::string& s, std::uint64_t fallback, const char* name) {
  if (s.empty()) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used == s.size() && s.front() != '-') return v;
  } catch (const std::exception&) {
  }
  throw Failure{kUsage, std::string("--") + name + ": expected a non-negative integer, got '" + s + "'"};
}

double to_real(const std::string& s, double fallback, const char* name) {
  if (s.empty()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Failure{kUsage, std::string("--") + name + ": expected a number, got '" + s + "'"};
}

GraphPtr obtain_graph(const Common& c) {
  mrg_graph* g = nullptr;
  if (!c.graph.empty()) {
    check(mrg_graph_load(c.graph.c_str(), c.sidecar.empty() ? nullptr : c.sidecar.c_str(), &g), "load");
  } else {
    if (c.n.empty()) throw Failure{kUsage, "either --graph or --n is required"};
    check(mrg_graph_sample(to_int(c.n, 0, "n"), to_real(c.p, 0.5, "p"), to_real(c.r, 0.5, "r"),
                           to_uint(c.seed, 1, "seed"), static_cast<int>(to_int(c.threads, 1, "threads")), &g),
          "sample");
  }
  return {g, &mrg_graph_free};
}

int cmd_gen(const Common& c) {
  if (c.n.empty()) throw Failure{kUsage, "gen: --n is required"};
  auto g = obtain_graph(c);
  if (c.out.empty() || c.out == "-") {
    OwnedString text;
    check(mrg_graph_to_dimacs(g.get(), &text.ptr), "gen");
    std::cout << text.str();
  } else {
    check(mrg_graph_save(g.get(), c.out.c_str(), sidecar_path(c.out).c_str()), "gen");
    std::cerr << "wrote " << c.out << " and " << sidecar_path(c.out) << " (n=" << mrg_graph_vertex_count(g.get())
              << ", m=" << mrg_graph_edge_count(g.get()) << ")\n";
  }
  return 0;
}

int cmd_edgeprobs(const Common& c) {
  const auto n = to_int(c.n, 0, "n");
  if (n < 2) throw Failure{kUsage, "edgeprobs: --n >= 2 is required"};
  const double p = to_real(c.p, 0.5, "p");
  const double r = to_real(c.r, 0.5, "r");
  std::vector<double> probs(static_cast<std::size_t>(n - 1));
  check(mrg_edge_probs(n, p, r, probs.data()), "edgeprobs");
  std::ostringstream s;
  if (c.format == "json") {
    nlohmann::ordered_json j{{"n", n}, {"p", p}, {"r", r}, {"probs", probs}};
    s << j.dump(2) << "\n";
  } else {
    s << "j,p_j\n";
    for (std::size_t j = 0; j < probs.size(); ++j) s << j + 1 << "," << csv_real(probs[j]) << "\n";
  }
  write_text(c.out, s.str());
  return 0;
}

int cmd_mis(const Common& c) {
  auto g = obtain_graph(c);
  mrg_alpha_result a{};
  check(mrg_exact_alpha(g.get(), to_uint(c.budget, 10'000'000, "budget"), &a), "mis");
  std::int64_t in_order = 0;
  std::int64_t min_degree = 0;
  check(mrg_greedy_in_order(g.get(), nullptr, &in_order), "mis");
  check(mrg_greedy_min_degree(g.get(), nullptr, &min_degree), "mis");
  const auto n = mrg_graph_vertex_count(g.get());
  const auto m = mrg_graph_edge_count(g.get());
  double turan = 0.0;
  check(mrg_turan_bound(n, m, &turan), "mis");
  std::ostringstream s;
  if (c.format == "json") {
    nlohmann::ordered_json j{{"n", n},          {"m", m},         {"exact", a.exact != 0}, {"alpha", a.value},
                             {"lower", a.lower}, {"upper", a.upper}, {"nodes", a.nodes},     {"greedy_in_order", in_order},
                             {"greedy_min_degree", min_degree}, {"turan", turan}};
    s << j.dump(2) << "\n";
  } else {
    s << "n,m,exact,alpha,lower,upper,nodes,greedy_in_order,greedy_min_degree,turan\n"
      << n << "," << m << "," << a.exact << "," << a.value << "," << a.lower << "," << a.upper << "," << a.nodes
      << "," << in_order << "," << min_degree << "," << csv_real(turan) << "\n";
  }
  write_text(c.out, s.str());
  if (!a.exact) {
    std::cerr << "mis: node budget exhausted; alpha in [" << a.lower << ", " << a.upper << "]\n";
    if (c.strict) return kTimeout;
  }
  return 0;
}

std::string join(const std::vector<std::int64_t>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(xs[i] + 1);
  return s;
}

int cmd_greedy(const Common& c, bool list) {
  auto g = obtain_graph(c);
  const auto n = mrg_graph_vertex_count(g.get());
  std::vector<std::int64_t> a(static_cast<std::size_t>(n));
  std::vector<std::int64_t> b(static_cast<std::size_t>(n));
  std::int64_t na = 0;
  std::int64_t nb = 0;
  check(mrg_greedy_in_order(g.get(), a.data(), &na), "greedy");
  check(mrg_greedy_min_degree(g.get(), b.data(), &nb), "greedy");
  a.resize(static_cast<std::size_t>(na));
  b.resize(static_cast<std::size_t>(nb));
  std::ostringstream s;
  if (c.format == "json") {
    nlohmann::ordered_json j{{"n", n}, {"m", mrg_graph_edge_count(g.get())}, {"greedy_in_order", na},
                             {"greedy_min_degree", nb}};
    if (list) {
      for (auto& v : a) ++v;
      for (auto& v : b) ++v;
      j["in_order_set"] = a;
      j["min_degree_set"] = b;
    }
    s << j.dump(2) << "\n";
  } else {
    s << "n,m,greedy_in_order,greedy_min_degree" << (list ? ",in_order_set,min_degree_set" : "") << "\n"
      << n << "," << mrg_graph_edge_count(g.get()) << "," << na << "," << nb;
    if (list) s << "," << join(a, ' ') << "," << join(b, ' ');
    s << "\n";
  }
  write_text(c.out, s.str());
  return 0;
}

int cmd_experiment(const Common& c, const std::string& name, bool list) {
  if (list) {
    OwnedString names;
    check(mrg_experiment_names(&names.ptr), "experiment");
    std::cout << names.str();
    return 0;
  }
  if (name.empty()) throw Failure{kUsage, "experiment: a name is required (see --list)"};
  std::string text;
  if (!c.config.empty()) text = read_file(c.config) + "\n";
  // Flags come after the file so that they win.
  const std::pair<const char*, const std::string*> overrides[] = {
      {"n", &c.n},         {"p", &c.p},           {"r", &c.r},           {"trials", &c.trials},
      {"seed", &c.seed},   {"eps", &c.eps},       {"budget", &c.budget}, {"threads", &c.threads}};
  for (const auto& [key, value] : overrides)
    if (!value->empty()) text += std::string(key) + " = " + *value + "\n";
  if (c.save_graphs) text += "graph_dir = " + (c.out.empty() || c.out == "-" ? std::string("graphs") : c.out + "_graphs") + "\n";

  mrg_result* raw = nullptr;
  check(mrg_experiment_run(name.c_str(), text.c_str(), &raw), "experiment");
  ResultPtr result(raw, &mrg_result_free);
  if (c.out.empty() || c.out == "-") {
    std::cout << (c.format == "json" ? mrg_result_summary(result.get()) : mrg_result_csv(result.get()));
  } else {
    write_text(c.out + ".csv", mrg_result_csv(result.get()));
    write_text(c.out + ".json", mrg_result_summary(result.get()));
  }
  const auto summary = nlohmann::json::parse(mrg_result_summary(result.get()));
  for (const auto& chk : summary["checks"])
    std::cerr << (chk["passed"].get<bool>() ? "PASS " : "FAIL ") << chk["name"].get<std::string>() << ": "
              << chk["detail"].get<std::string>() << "\n";
  if (c.strict && mrg_result_timeouts(result.get()) > 0) return kTimeout;
  return mrg_result_passed(result.get()) ? 0 : kCheckFailed;
}

int cmd_bounds(const Common& c, const std::string& m) {
  const auto n = to_int(c.n, 0, "n");
  if (n < 2) throw Failure{kUsage, "bounds: --n >= 2 is required"};
  OwnedString json;
  check(mrg_bounds_json(n, to_int(m, -1, "m"), to_real(c.r, 0.5, "r"), to_real(c.eps, 0.5, "eps"), &json.ptr),
        "bounds");
  std::ostringstream s;
  if (c.format == "json") {
    s << json.str() << "\n";
  } else {
    s << "name,value,kind,validity\n";
    for (const auto& b : nlohmann::json::parse(json.str()))
      s << b["name"].get<std::string>() << "," << csv_real(b["value"].get<double>()) << ","
        << b["kind"].get<std::string>() << ",\"" << b["validity"].get<std::string>() << "\"\n";
  }
  write_text(c.out, s.str());
  return 0;
}

int cmd_verify(const Common& c) {
  bool ok = true;
  nlohmann::ordered_json report;
  if (!c.graph.empty()) {
    mrg_graph* g = nullptr;
    const auto status = mrg_graph_load(c.graph.c_str(), c.sidecar.empty() ? nullptr : c.sidecar.c_str(), &g);
    GraphPtr owned(g, &mrg_graph_free);
    const bool loaded = status == MRG_OK;
    ok = loaded;
    report["graph"] = {{"path", c.graph}, {"valid", loaded},
                       {"detail", loaded ? "n=" + std::to_string(mrg_graph_vertex_count(g)) +
                                               " m=" + std::to_string(mrg_graph_edge_count(g))
                                         : std::string(mrg_last_error())}};
  } else {
    OwnedString json;
    int passed = 0;
    check(mrg_verify(&json.ptr, &passed), "verify");
    ok = passed != 0;
    report["checks"] = nlohmann::ordered_json::parse(json.str());
  }
  report["passed"] = ok;
  write_text(c.out, report.dump(2) + "\n");
  return ok ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov random graphs: sampling, independent sets, bounds and experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mrg_version());

  Common c;
  bool list_sets = false;
  bool list_experiments = false;
  std::string experiment_name;
  std::string edges;

  auto* gen = app.add_subcommand("gen", "Sample a graph and write DIMACS (+ JSON sidecar with --out)");
  add_model(gen, c);
  gen->add_option("--out", c.out, "DIMACS path; the sidecar goes next to it (default: stdout)");
  gen->add_option("--threads", c.threads, "Worker threads (0 = all cores)");

  auto* edgeprobs = app.add_subcommand("edgeprobs", "Print the edge-probability table p_1..p_{n-1}");
  add_model(edgeprobs, c);
  add_format(edgeprobs, c);

  auto* mis = app.add_subcommand("mis", "Exact independence number with greedy and Turan references");
  add_model(mis, c);
  add_format(mis, c);
  add_graph_source(mis, c);
  mis->add_option("--budget", c.budget, "Branch-node budget (default 10000000)");
  mis->add_flag("--strict", c.strict, "Exit 3 when the budget runs out");

  auto* greedy = app.add_subcommand("greedy", "Greedy independent sets (vertex order and minimum degree)");
  add_model(greedy, c);
  add_format(greedy, c);
  add_graph_source(greedy, c);
  greedy->add_flag("--list", list_sets, "Also print the sets (1-based ids)");

  auto* experiment = app.add_subcommand("experiment", "Run a seeded experiment; writes <out>.csv and <out>.json");
  experiment->add_option("name", experiment_name, "Experiment name (see --list)");
  experiment->add_flag("--list", list_experiments, "List experiment names");
  add_model(experiment, c);
  add_format(experiment, c);
  experiment->add_option("--trials", c.trials, "Trials per grid point");
  experiment->add_option("--eps", c.eps, "Epsilon used by bounds and tail events");
  experiment->add_option("--budget", c.budget, "Branch-node budget for exact alpha");
  experiment->add_option("--threads", c.threads, "Worker threads (0 = all cores); output does not depend on it");
  experiment->add_option("--config", c.config, "key = value file; flags override its entries");
  experiment->add_flag("--save-graphs", c.save_graphs, "Save sampled graphs (DIMACS + JSON) under <out>_graphs/");
  experiment->add_flag("--strict", c.strict, "Exit 3 when any exact solve runs out of budget");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the asymptotic bounds for given n, r, eps");
  bounds->add_option("--n", c.n, "Vertex count")->required();
  bounds->add_option("--r", c.r, "Decay parameter (default 0.5)");
  bounds->add_option("--eps", c.eps, "Epsilon (default 0.5)");
  bounds->add_option("--m", edges, "Edge count; adds the chromatic bounds");
  add_format(bounds, c);

  auto* verify = app.add_subcommand("verify", "Run built-in checks, or validate a DIMACS file with --graph");
  verify->add_option("--graph", c.graph, "DIMACS file to validate");
  verify->add_option("--sidecar", c.sidecar, "JSON sidecar for --graph");
  verify->add_option("--out", c.out, "Report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) return cmd_gen(c);
    if (*edgeprobs) return cmd_edgeprobs(c);
    if (*mis) return cmd_mis(c);
    if (*greedy) return cmd_greedy(c, list_sets);
    if (*experiment) return cmd_experiment(c, experiment_name, list_experiments);
    if (*bounds) return cmd_bounds(c, edges);
    if (*verify) return cmd_verify(c);
  } catch (const Failure& f) {
    std::cerr << "mrg: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "mrg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
