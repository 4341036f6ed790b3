#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mrg/stable.hpp"

// Seeded Monte Carlo experiments. Each run produces a CSV table (header row, fields at
// 17 significant digits) and a JSON summary holding the config echo, aggregates and the
// pass/fail state of the built-in checks. Output depends only on the config, never on
// the number of worker threads.
namespace mrg::experiment {

enum class Kind {
  edge_marginals,
  degree_concentration,
  alpha_vs_bounds,
  bernoulli_concentration,
  subset_oracle,
  root_table,
  greedy_scaling,
};

const std::vector<std::string>& kind_names();
Kind parse_kind(std::string_view name);
std::string_view to_string(Kind kind);

struct Config {
  Kind kind = Kind::edge_marginals;
  std::vector<std::int64_t> n_grid;
  std::vector<double> p_grid;
  std::vector<double> r_grid;
  std::int64_t trials = 1;
  std::uint64_t seed = 1;
  double eps = 0.5;
  double beta = 0.0;  // bernoulli-concentration; 0 means 1 - r
  std::int64_t max_empirical_n = 100'000;
  std::int64_t pz_n = 10'000;  // Paley-Zygmund check length; 0 disables
  std::uint64_t budget = stable::kDefaultBudget;
  std::string graph_dir;  // non-empty: save every sampled graph here (DIMACS + JSON)
  int threads = 0;        // 0: hardware concurrency

  void validate() const;
};

/// Defaults reproducing the reference setting of each experiment.
Config defaults_for(Kind kind);

/// Flat "key = value" lines; '#' starts a comment; later keys win.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Applies recognised keys (n, p, r, trials, seed, eps, beta, budget, threads,
/// max_empirical_n, pz_n, graph_dir); grids are comma separated. Unknown keys throw.
void apply(Config& config, const std::map<std::string, std::string>& values);

std::vector<std::int64_t> parse_int_grid(std::string_view text);
std::vector<double> parse_real_grid(std::string_view text);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Result {
  std::string csv;
  std::string summary_json;
  std::vector<Check> checks;
  std::int64_t timeouts = 0;  // alpha-vs-bounds instances that exhausted the budget
  bool passed() const;
};

Result run(const Config& config);

/// "%.17g".
std::string format_real(double value);

}  // namespace mrg::experiment
