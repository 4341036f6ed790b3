#include "mrg/mrg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mrg/experiment.hpp"
#include "mrg/graph_io.hpp"
#include "mrg/graphgen.hpp"
#include "mrg/rng.hpp"
#include "mrg/stable.hpp"
#include "mrg/theory.hpp"
#include "mrg/verify.hpp"

struct mrg_graph {
  mrg::MarkovGraph graph;
};

struct mrg_result {
  mrg::experiment::Result result;
};

namespace {

thread_local std::string last_error;

template <class Fn>
mrg_status guarded(Fn&& fn) {
  try {
    fn();
    return MRG_OK;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MRG_OUT_OF_MEMORY;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return MRG_DOMAIN_ERROR;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return MRG_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return MRG_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    last_error = e.what();
    return MRG_IO_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MRG_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return MRG_INTERNAL_ERROR;
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string join_int(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string join_real(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + mrg::experiment::format_real(xs[i]);
  return s;
}

mrg_status set_output(const std::vector<mrg::Vertex>& set, int64_t* vertices, int64_t* size) {
  *size = static_cast<int64_t>(set.size());
  if (vertices) std::copy(set.begin(), set.end(), vertices);
  return MRG_OK;
}

}  // namespace

extern "C" {

const char* mrg_version(void) { return "1.0.0"; }

const char* mrg_last_error(void) { return last_error.c_str(); }

void mrg_string_free(char* s) { std::free(s); }

uint64_t mrg_derive_seed(uint64_t master, uint64_t index) { return mrg::derive_seed(master, index); }

mrg_status mrg_graph_sample(int64_t n, double p, double r, uint64_t seed, int threads, mrg_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mrg_graph{mrg::sample_graph(mrg::GraphParams{n, p, r, seed}, threads)};
  });
}

mrg_status mrg_graph_load(const char* dimacs_path, const char* json_path, mrg_graph** out) {
  return guarded([&] {
    require(dimacs_path, "dimacs_path");
    require(out, "out");
    *out = new mrg_graph{mrg::io::load_graph(dimacs_path, json_path ? json_path : "")};
  });
}

mrg_status mrg_graph_save(const mrg_graph* graph, const char* dimacs_path, const char* json_path) {
  return guarded([&] {
    require(graph, "graph");
    require(dimacs_path, "dimacs_path");
    require(json_path, "json_path");
    mrg::io::save_graph(graph->graph, dimacs_path, json_path);
  });
}

mrg_status mrg_graph_to_dimacs(const mrg_graph* graph, char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = duplicate(mrg::io::to_dimacs(graph->graph));
  });
}

mrg_status mrg_graph_sidecar(const mrg_graph* graph, char** out_json) {
  return guarded([&] {
    require(graph, "graph");
    require(out_json, "out_json");
    *out_json = duplicate(mrg::io::sidecar_json(graph->graph));
  });
}

void mrg_graph_free(mrg_graph* graph) { delete graph; }

int64_t mrg_graph_vertex_count(const mrg_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }

int64_t mrg_graph_edge_count(const mrg_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

mrg_status mrg_graph_degree_stats(const mrg_graph* graph, mrg_degree_stats* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    const auto s = mrg::stable::degree_stats(graph->graph);
    *out = {s.m, s.min_deg, s.max_deg, s.avg_deg};
  });
}

mrg_status mrg_edge_probs(int64_t n, double p, double r, double* out) {
  return guarded([&] {
    require(out, "out");
    mrg::GraphParams params{n, p, r, 0};
    params.validate();
    const auto table = mrg::edge_prob_table(params);
    std::copy(table.values().begin(), table.values().end(), out);
  });
}

mrg_status mrg_greedy_in_order(const mrg_graph* graph, int64_t* vertices, int64_t* size) {
  return guarded([&] {
    require(graph, "graph");
    require(size, "size");
    set_output(mrg::stable::greedy_in_order(graph->graph), vertices, size);
  });
}

mrg_status mrg_greedy_min_degree(const mrg_graph* graph, int64_t* vertices, int64_t* size) {
  return guarded([&] {
    require(graph, "graph");
    require(size, "size");
    set_output(mrg::stable::greedy_min_degree(graph->graph), vertices, size);
  });
}

mrg_status mrg_exact_alpha(const mrg_graph* graph, uint64_t budget, mrg_alpha_result* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    const auto a = mrg::stable::exact_alpha(graph->graph, budget);
    *out = {a.exact ? 1 : 0, a.value, a.lower, a.upper, a.nodes};
  });
}

mrg_status mrg_turan_bound(int64_t n, int64_t m, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = mrg::stable::turan_bounds(n, m);
  });
}

mrg_status mrg_upper_root(double r, double tol, mrg_root_result* out) {
  return guarded([&] {
    require(out, "out");
    const auto root = mrg::theory::upper_root(r, tol);
    *out = {root.c_star, root.log_one_minus_c, root.residual, root.iterations, root.margin};
  });
}

mrg_status mrg_independence_prob_upper(int64_t n, int64_t k, double p, double r, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = mrg::independence_prob_upper(n, k, p, r);
  });
}

mrg_status mrg_bounds_json(int64_t n, int64_t m, double r, double eps, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    using mrg::theory::BoundReport;
    const auto nd = static_cast<double>(n);
    std::vector<BoundReport> all;
    auto add = [&](std::vector<BoundReport> xs) { all.insert(all.end(), xs.begin(), xs.end()); };
    add(mrg::theory::alpha_upper(nd, r, eps));
    if (r < 1.0) {
      add(mrg::theory::alpha_lower(nd, r, eps));
      add(mrg::theory::degree_bounds(nd, r, eps));
      if (m >= 0) add(mrg::theory::chromatic_bounds(n, m, r, eps));
      add(mrg::theory::greedy_bound(nd, r));
      add(mrg::theory::performance_ratio_bounds(nd, r, eps));
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& b : all)
      j.push_back({{"name", b.name}, {"value", b.value}, {"validity", b.validity},
                   {"kind", mrg::theory::to_string(b.kind)}});
    *out_json = duplicate(j.dump(2));
  });
}

mrg_status mrg_experiment_names(char** out) {
  return guarded([&] {
    require(out, "out");
    std::string s;
    for (const auto& name : mrg::experiment::kind_names()) s += name + "\n";
    *out = duplicate(s);
  });
}

mrg_status mrg_experiment_defaults(const char* name, char** out_text) {
  return guarded([&] {
    require(name, "name");
    require(out_text, "out_text");
    const auto c = mrg::experiment::defaults_for(mrg::experiment::parse_kind(name));
    std::string s;
    s += "n = " + join_int(c.n_grid) + "\n";
    s += "p = " + join_real(c.p_grid) + "\n";
    s += "r = " + join_real(c.r_grid) + "\n";
    s += "trials = " + std::to_string(c.trials) + "\n";
    s += "seed = " + std::to_string(c.seed) + "\n";
    s += "eps = " + mrg::experiment::format_real(c.eps) + "\n";
    if (c.kind == mrg::experiment::Kind::alpha_vs_bounds) s += "budget = " + std::to_string(c.budget) + "\n";
    if (c.kind == mrg::experiment::Kind::bernoulli_concentration) {
      s += "beta = 0  # 0 means 1 - r\n";
      s += "max_empirical_n = " + std::to_string(c.max_empirical_n) + "\n";
      s += "pz_n = " + std::to_string(c.pz_n) + "\n";
    }
    *out_text = duplicate(s);
  });
}

mrg_status mrg_experiment_run(const char* name, const char* config_text, mrg_result** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto config = mrg::experiment::defaults_for(mrg::experiment::parse_kind(name));
    if (config_text) mrg::experiment::apply(config, mrg::experiment::parse_key_values(config_text));
    *out = new mrg_result{mrg::experiment::run(config)};
  });
}

const char* mrg_result_csv(const mrg_result* result) { return result ? result->result.csv.c_str() : ""; }

const char* mrg_result_summary(const mrg_result* result) {
  return result ? result->result.summary_json.c_str() : "";
}

int mrg_result_passed(const mrg_result* result) { return result && result->result.passed() ? 1 : 0; }

int64_t mrg_result_timeouts(const mrg_result* result) { return result ? result->result.timeouts : 0; }

void mrg_result_free(mrg_result* result) { delete result; }

mrg_status mrg_verify(char** out_json, int* passed) {
  return guarded([&] {
    require(out_json, "out_json");
    require(passed, "passed");
    const auto checks = mrg::verify::builtin();
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& c : checks) {
      ok = ok && c.passed;
      j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    *passed = ok ? 1 : 0;
    *out_json = duplicate(j.dump(2) + "\n");
  });
}

}  // extern "C"
