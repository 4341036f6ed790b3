#include "mrg/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mrg/bernoulli.hpp"
#include "mrg/graph_io.hpp"
#include "mrg/graphgen.hpp"
#include "mrg/rng.hpp"
#include "mrg/stats.hpp"
#include "mrg/theory.hpp"
#include "parallel.hpp"

namespace mrg::experiment {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<Kind, std::string>>& kind_table() {
  static const std::vector<std::pair<Kind, std::string>> table = {
      {Kind::edge_marginals, "edge-marginals"},
      {Kind::degree_concentration, "degree-concentration"},
      {Kind::alpha_vs_bounds, "alpha-vs-bounds"},
      {Kind::bernoulli_concentration, "bernoulli-concentration"},
      {Kind::subset_oracle, "subset-oracle"},
      {Kind::root_table, "root-table"},
      {Kind::greedy_scaling, "greedy-scaling"},
  };
  return table;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = text.find(',');
    out.push_back(trim(text.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

double parse_real(std::string_view s) {
  const std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + str + "'");
  }
  if (used != str.size()) throw std::invalid_argument("not a number: '" + str + "'");
  return v;
}

std::int64_t parse_int(std::string_view s) {
  const std::string str(s);
  if (const auto caret = str.find('^'); caret != std::string::npos) {
    const auto base = parse_int(str.substr(0, caret));
    const auto exp = parse_int(str.substr(caret + 1));
    if (exp < 0 || exp > 62) throw std::invalid_argument("exponent out of range: '" + str + "'");
    const double v = std::pow(static_cast<double>(base), static_cast<double>(exp));
    if (v > 9.0e18) throw std::invalid_argument("integer out of range: '" + str + "'");
    return static_cast<std::int64_t>(std::llround(v));
  }
  const double v = parse_real(s);
  if (v != std::floor(v) || std::abs(v) > 9.0e18) throw std::invalid_argument("not an integer: '" + str + "'");
  return static_cast<std::int64_t>(v);
}

std::uint64_t parse_seed(std::string_view s) {
  const std::string str(s);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(str, &used, 0);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a seed: '" + str + "'");
  }
  if (used != str.size() || str.front() == '-') throw std::invalid_argument("not a seed: '" + str + "'");
  return v;
}

class Csv {
 public:
  explicit Csv(std::initializer_list<const char*> header) : columns_(header.size()) {
    std::size_t k = 0;
    for (const char* h : header) out_ << (k++ ? "," : "") << h;
    out_ << '\n';
  }
  Csv& operator<<(double v) { return put(format_real(v)); }
  Csv& operator<<(std::int64_t v) { return put(std::to_string(v)); }
  Csv& operator<<(std::uint64_t v) { return put(std::to_string(v)); }
  Csv& operator<<(int v) { return put(std::to_string(v)); }
  Csv& operator<<(bool v) { return put(v ? "1" : "0"); }
  Csv& operator<<(const std::string& v) { return put(v); }
  std::string str() const { return out_.str(); }

 private:
  Csv& put(const std::string& field) {
    out_ << (filled_ ? "," : "") << field;
    if (++filled_ == columns_) {
      out_ << '\n';
      filled_ = 0;
    }
    return *this;
  }
  std::ostringstream out_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

struct Point {
  double p;
  double r;
};

std::vector<Point> points(const Config& c) {
  std::vector<Point> out;
  for (double p : c.p_grid)
    for (double r : c.r_grid) out.push_back({p, r});
  return out;
}

bool strictly_decreasing(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] < xs[i - 1])) return false;
  return true;
}

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + format_real(xs[i]);
  return s;
}

void maybe_save(const Config& c, const MarkovGraph& g, std::int64_t trial) {
  if (c.graph_dir.empty()) return;
  std::filesystem::create_directories(c.graph_dir);
  const auto& gp = g.params();
  char stem[160];
  std::snprintf(stem, sizeof stem, "%s_n%lld_p%g_r%g_t%lld", std::string(to_string(c.kind)).c_str(),
                static_cast<long long>(gp.n), gp.p, gp.r, static_cast<long long>(trial));
  const auto base = std::filesystem::path(c.graph_dir) / stem;
  io::save_graph(g, base.string() + ".dimacs", base.string() + ".json");
}

json config_echo(const Config& c) {
  json j;
  j["experiment"] = std::string(to_string(c.kind));
  j["n"] = c.n_grid;
  j["p"] = c.p_grid;
  j["r"] = c.r_grid;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["eps"] = c.eps;
  if (c.kind == Kind::bernoulli_concentration) {
    j["beta"] = c.beta;
    j["max_empirical_n"] = c.max_empirical_n;
  }
  if (c.kind == Kind::alpha_vs_bounds) j["budget"] = c.budget;
  return j;
}

struct Output {
  Result result;
  json aggregates = json::array();

  void check(std::string name, bool passed, std::string detail) {
    result.checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

std::string short_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string point_label(const Point& pt) { return "p=" + short_real(pt.p) + " r=" + short_real(pt.r); }

// ---------------------------------------------------------------------------

std::string edge_marginals(const Config& c, Output& out) {
  Csv csv({"n", "p", "r", "u", "v", "j", "p_j", "frequency", "sigma", "z", "within_4sigma"});
  for (const auto& pt : points(c)) {
    for (const auto n : c.n_grid) {
      if (n < 2) throw std::invalid_argument("edge-marginals: n must be >= 2");
      const EdgeProbTable table(n - 1, pt.p, pt.r);
      const auto pairs = n * (n - 1) / 2;
      const std::int64_t chunks = std::clamp<std::int64_t>((std::int64_t{1} << 24) / pairs, 1,
                                                           std::min<std::int64_t>(64, c.trials));
      std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(chunks));
      detail::parallel_for(chunks, c.threads, [&](std::int64_t k) {
        auto& local = counts[static_cast<std::size_t>(k)];
        local.assign(static_cast<std::size_t>(pairs), 0);
        for (std::int64_t t = k; t < c.trials; t += chunks) {
          const auto seed = derive_seed(c.seed, static_cast<std::uint64_t>(t));
          for (Vertex v = 1; v < n; ++v)
            for (Vertex u : sample_chain(v, table, seed)) ++local[static_cast<std::size_t>(v * (v - 1) / 2 + u)];
        }
      });
      std::int64_t violations = 0;
      double max_z = 0.0;
      const auto trials = static_cast<double>(c.trials);
      for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
          std::int64_t hits = 0;
          for (const auto& local : counts) hits += local[static_cast<std::size_t>(v * (v - 1) / 2 + u)];
          const double pj = table.values()[static_cast<std::size_t>(u)];
          const double freq = static_cast<double>(hits) / trials;
          const double sigma = std::sqrt(pj * (1.0 - pj) / trials);
          const double z = sigma > 0.0 ? (freq - pj) / sigma : (freq == pj ? 0.0 : HUGE_VAL);
          const bool ok = std::abs(freq - pj) <= 4.0 * sigma;
          violations += !ok;
          max_z = std::max(max_z, std::abs(z));
          csv << n << pt.p << pt.r << std::int64_t{u + 1} << std::int64_t{v + 1} << std::int64_t{u + 1} << pj
              << freq << sigma << z << ok;
        }
      }
      out.aggregates.push_back({{"n", n}, {"p", pt.p}, {"r", pt.r}, {"edges", pairs},
                                {"violations", violations}, {"max_abs_z", max_z}});
      out.check("edge frequencies within 4 sigma (" + point_label(pt) + " n=" + std::to_string(n) + ")",
                violations == 0, std::to_string(violations) + " violations, max |z| = " + format_real(max_z));
    }
  }
  return csv.str();
}

double exact_mean_degree(std::int64_t n, const EdgeProbTable& table) {
  double total = 0.0;
  for (std::int64_t j = 1; j < n; ++j) total += static_cast<double>(n - j) * table.prob(j);
  return 2.0 * total / static_cast<double>(n);
}

std::string degree_concentration(const Config& c, Output& out) {
  Csv csv({"n", "p", "r", "trial", "seed", "m", "d", "d_over_log_n", "exact_E_d_over_log_n", "target",
           "min_deg", "max_deg", "min_deg_upper", "max_deg_lower"});
  for (const auto& pt : points(c)) {
    if (!(pt.r < 1.0)) throw std::invalid_argument("degree-concentration: r must be < 1");
    const double target = 2.0 / (1.0 - pt.r);
    std::vector<double> exact_dev;
    double last_exact = 0.0;
    for (const auto n : c.n_grid) {
      if (n < 2) throw std::invalid_argument("degree-concentration: n must be >= 2");
      const EdgeProbTable table(n - 1, pt.p, pt.r);
      const double logn = std::log(static_cast<double>(n));
      const double exact = exact_mean_degree(n, table) / logn;
      const auto bounds = theory::degree_bounds(static_cast<double>(n), pt.r, c.eps);
      std::vector<stable::DegreeStats> stats(static_cast<std::size_t>(c.trials));
      detail::parallel_for(c.trials, c.threads, [&](std::int64_t t) {
        const GraphParams gp{n, pt.p, pt.r, derive_seed(c.seed, static_cast<std::uint64_t>(t))};
        const auto g = sample_graph(gp, table, 1);
        maybe_save(c, g, t);
        stats[static_cast<std::size_t>(t)] = stable::degree_stats(g);
      });
      std::vector<double> ys;
      std::int64_t degree_hits = 0;
      for (std::int64_t t = 0; t < c.trials; ++t) {
        const auto& s = stats[static_cast<std::size_t>(t)];
        ys.push_back(s.avg_deg / logn);
        degree_hits += static_cast<double>(s.min_deg) <= bounds[0].value &&
                       static_cast<double>(s.max_deg) >= bounds[1].value;
        csv << n << pt.p << pt.r << t << derive_seed(c.seed, static_cast<std::uint64_t>(t)) << s.m << s.avg_deg
            << ys.back() << exact << target << s.min_deg << s.max_deg << bounds[0].value << bounds[1].value;
      }
      const double mean = stats::mean(ys);
      const double se = std::sqrt(stats::variance(ys) / static_cast<double>(c.trials));
      out.aggregates.push_back({{"n", n}, {"p", pt.p}, {"r", pt.r}, {"mean_d_over_log_n", mean},
                                {"standard_error", se}, {"exact_E_d_over_log_n", exact}, {"target", target},
                                {"degree_bounds_hit_fraction",
                                 static_cast<double>(degree_hits) / static_cast<double>(c.trials)}});
      if (c.trials >= 2)
        out.check("Monte Carlo mean within 3 standard errors of exact (" + point_label(pt) +
                      " n=" + std::to_string(n) + ")",
                  std::abs(mean - exact) <= 3.0 * se,
                  "mean " + format_real(mean) + ", exact " + format_real(exact) + ", se " + format_real(se));
      exact_dev.push_back(std::abs(exact - target));
      last_exact = exact;
    }
    if (exact_dev.size() >= 2)
      out.check("exact E[d]/log n monotonically closer to 2/gamma (" + point_label(pt) + ")",
                strictly_decreasing(exact_dev), "deviations " + join(exact_dev));
    const double rel = std::abs(last_exact - target) / target;
    out.check("exact E[d]/log n within 15% of 2/gamma at n=" + std::to_string(c.n_grid.back()) + " (" +
                  point_label(pt) + ")",
              rel <= 0.15, "relative deviation " + format_real(rel));
  }
  return csv.str();
}

std::string alpha_vs_bounds(const Config& c, Output& out) {
  Csv csv({"n", "p", "r", "trial", "seed", "m", "avg_deg", "greedy_in_order", "greedy_min_degree",
           "greedy_maximal", "exact", "alpha", "alpha_lower", "alpha_upper", "nodes", "turan",
           "n_over_1_plus_d", "ratio_min_degree", "ratio_bound", "theory_lower", "theory_upper"});
  struct Row {
    stable::DegreeStats stats;
    std::int64_t in_order = 0;
    std::int64_t min_degree = 0;
    bool maximal = false;
    stable::AlphaResult alpha;
  };
  for (const auto& pt : points(c)) {
    for (const auto n : c.n_grid) {
      if (n < 2) throw std::invalid_argument("alpha-vs-bounds: n must be >= 2");
      const EdgeProbTable table(n - 1, pt.p, pt.r);
      std::vector<Row> rows(static_cast<std::size_t>(c.trials));
      detail::parallel_for(c.trials, c.threads, [&](std::int64_t t) {
        const GraphParams gp{n, pt.p, pt.r, derive_seed(c.seed, static_cast<std::uint64_t>(t))};
        const auto g = sample_graph(gp, table, 1);
        maybe_save(c, g, t);
        auto& row = rows[static_cast<std::size_t>(t)];
        row.stats = stable::degree_stats(g);
        const auto a = stable::greedy_in_order(g);
        const auto b = stable::greedy_min_degree(g);
        row.in_order = static_cast<std::int64_t>(a.size());
        row.min_degree = static_cast<std::int64_t>(b.size());
        row.maximal = stable::is_maximal_independent(g, a) && stable::is_maximal_independent(g, b);
        row.alpha = stable::exact_alpha(g, c.budget);
      });
      const double theory_lower =
          pt.r < 1.0 ? theory::alpha_lower(static_cast<double>(n), pt.r, c.eps)[0].value : 0.0;
      const double theory_upper = theory::alpha_upper(static_cast<double>(n), pt.r)[0].value;
      std::int64_t violations = 0;
      std::int64_t solved = 0;
      std::int64_t not_maximal = 0;
      std::int64_t below_theory = 0;
      for (std::int64_t t = 0; t < c.trials; ++t) {
        const auto& row = rows[static_cast<std::size_t>(t)];
        const auto& s = row.stats;
        const double turan = stable::turan_bounds(n, s.m);
        const double degree_form = static_cast<double>(n) / (1.0 + s.avg_deg);
        const double ratio = stable::performance_ratio(row.alpha.upper, row.min_degree);
        const double ratio_bound = theory::min_degree_ratio_bound(s.avg_deg);
        if (row.alpha.exact) {
          ++solved;
          const auto alpha = static_cast<double>(row.alpha.value);
          // small slack for the floating-point bounds
          const double tol = 1e-9;
          const bool ok = row.alpha.value >= row.in_order && row.alpha.value >= row.min_degree &&
                          row.in_order >= 1 && row.min_degree >= 1 && alpha + tol >= turan &&
                          alpha + tol >= degree_form && ratio <= ratio_bound + tol;
          violations += !ok;
          below_theory += alpha < theory_lower;
        } else {
          ++out.result.timeouts;
        }
        not_maximal += !row.maximal;
        csv << n << pt.p << pt.r << t << derive_seed(c.seed, static_cast<std::uint64_t>(t)) << s.m << s.avg_deg
            << row.in_order << row.min_degree << row.maximal << row.alpha.exact << row.alpha.value
            << row.alpha.lower << row.alpha.upper << row.alpha.nodes << turan << degree_form << ratio
            << ratio_bound << theory_lower << theory_upper;
      }
      const double solved_fraction = static_cast<double>(solved) / static_cast<double>(c.trials);
      out.aggregates.push_back({{"n", n}, {"p", pt.p}, {"r", pt.r}, {"solved", solved},
                                {"solved_fraction", solved_fraction}, {"violations", violations},
                                {"solved_below_asymptotic_lower_bound", below_theory}});
      const std::string where = " (" + point_label(pt) + " n=" + std::to_string(n) + ")";
      out.check("bound ordering on solved instances" + where, violations == 0,
                std::to_string(violations) + " violations over " + std::to_string(solved) + " solved");
      out.check("greedy outputs independent and maximal" + where, not_maximal == 0,
                std::to_string(not_maximal) + " failures");
      out.check("exact solver completes on >= 90% of instances" + where, solved_fraction >= 0.9,
                "solved fraction " + format_real(solved_fraction));
    }
  }
  return csv.str();
}

std::string bernoulli_concentration(const Config& c, Output& out) {
  Csv csv({"n", "p1", "beta", "exact_mean_Y", "scaled_exact_mean", "exact_deviation", "has_empirical",
           "trials", "empirical_mean_Y", "tail_count", "tail_prob", "tail_ci_lower", "tail_ci_upper"});
  for (const auto& pt : points(c)) {
    const double beta = c.beta > 0.0 ? c.beta : 1.0 - pt.r;
    bernoulli::ChainParams params{pt.p, beta, c.n_grid.back(), c.seed};
    params.validate();
    const auto rows = bernoulli::concentration_report(params, c.n_grid, c.trials, c.eps, c.max_empirical_n,
                                                      c.threads);
    std::vector<double> deviation;
    std::vector<double> tail;
    for (const auto& row : rows) {
      deviation.push_back(std::abs(row.scaled_exact_mean - 1.0));
      if (row.has_empirical) tail.push_back(row.tail_prob);
      csv << row.n << pt.p << beta << row.exact_mean_Y << row.scaled_exact_mean << deviation.back()
          << row.has_empirical << row.trials << row.empirical_mean_Y << row.tail_count << row.tail_prob
          << row.tail_ci.lower << row.tail_ci.upper;
    }
    const std::string where = " (p1=" + short_real(pt.p) + " beta=" + short_real(beta) + ")";
    out.check("exact beta E[S_n]/log n deviation from 1 decreasing" + where, strictly_decreasing(deviation),
              "deviations " + join(deviation));
    if (tail.size() >= 2) {
      bool ok = tail.back() < tail.front();
      for (std::size_t i = 1; i < tail.size(); ++i) ok = ok && tail[i] <= tail[i - 1];
      out.check("empirical tail probability decreasing" + where, ok, "tail " + join(tail));
    }
    json pz = json::array();
    if (c.pz_n >= 1 && c.pz_n <= bernoulli::kSecondMomentLimit) {
      for (const double theta : {0.25, 0.5}) {
        bernoulli::ChainParams at = params;
        at.n = c.pz_n;
        const auto check = bernoulli::paley_zygmund_check(at, theta, c.trials, c.threads);
        pz.push_back({{"theta", theta}, {"n", check.n}, {"empirical", check.empirical},
                      {"ci_lower", check.ci.lower}, {"ci_upper", check.ci.upper}, {"bound", check.bound},
                      {"holds", check.holds}});
        out.check("Paley-Zygmund band theta=" + short_real(theta) + " n=" + std::to_string(c.pz_n) + where,
                  check.holds,
                  "empirical " + format_real(check.empirical) + " (CI upper " + format_real(check.ci.upper) +
                      ") vs bound " + format_real(check.bound));
      }
    }
    out.aggregates.push_back({{"p1", pt.p}, {"beta", beta}, {"exact_deviation", deviation},
                              {"tail_prob", tail}, {"paley_zygmund", pz}});
  }
  return csv.str();
}

std::string subset_label(std::uint64_t mask) {
  std::string s;
  for (int v = 0; v < 64; ++v)
    if ((mask >> v) & 1u) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

std::string subset_oracle(const Config& c, Output& out) {
  Csv csv({"n", "p", "r", "subset", "size", "exact_dp", "enumeration", "abs_diff"});
  for (const auto& pt : points(c)) {
    for (const auto n : c.n_grid) {
      if (n < 2 || n > 7) throw std::invalid_argument("subset-oracle: n must lie in [2, 7]");
      const EdgeProbTable table(n - 1, pt.p, pt.r);
      const auto brute = subset_independence_by_enumeration(table, pt.r, n);
      double max_diff = 0.0;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> subset;
        for (Vertex v = 0; v < n; ++v)
          if ((mask >> v) & 1u) subset.push_back(v);
        const double dp = exact_subset_independence(table, pt.r, subset);
        const double diff = std::abs(dp - brute[mask]);
        max_diff = std::max(max_diff, diff);
        csv << n << pt.p << pt.r << subset_label(mask) << static_cast<std::int64_t>(subset.size()) << dp
            << brute[mask] << diff;
      }
      out.aggregates.push_back({{"n", n}, {"p", pt.p}, {"r", pt.r}, {"max_abs_diff", max_diff}});
      out.check("DP equals enumeration within 1e-12 (" + point_label(pt) + " n=" + std::to_string(n) + ")",
                max_diff <= 1e-12, "max |diff| = " + format_real(max_diff));
    }
  }
  return csv.str();
}

std::string root_table(const Config& c, Output& out) {
  Csv csv({"r", "c_star", "log_one_minus_c", "residual", "iterations", "upper_constant", "margin",
           "margin_positive"});
  std::int64_t residual_fail = 0;
  std::vector<double> failing;
  for (const double r : c.r_grid) {
    const auto root = theory::upper_root(r);
    residual_fail += root.residual > 1e-12;
    if (!(root.margin > 0.0)) failing.push_back(r);
    csv << r << root.c_star << root.log_one_minus_c << root.residual << root.iterations
        << theory::upper_constant(r) << root.margin << (root.margin > 0.0);
  }
  out.aggregates.push_back({{"rows", c.r_grid.size()}, {"residual_failures", residual_fail},
                            {"nonpositive_margin_r", failing}});
  out.check("|f_r(c*)| <= 1e-12 for every r", residual_fail == 0,
            std::to_string(residual_fail) + " rows above tolerance");
  out.check("c* < e^{-r} + r/10 with positive margin for every r", failing.empty(),
            std::to_string(failing.size()) + " rows with non-positive margin" +
                (failing.empty() ? "" : ", r in [" + short_real(failing.front()) + ", " +
                                            short_real(failing.back()) + "]"));
  return csv.str();
}

std::string greedy_scaling(const Config& c, Output& out) {
  Csv csv({"n", "p", "r", "trial", "seed", "m", "greedy_in_order", "bound", "bound_ceiling"});
  for (const auto& pt : points(c)) {
    if (!(pt.r < 1.0)) throw std::invalid_argument("greedy-scaling: r must be < 1");
    std::vector<double> ns;
    std::vector<double> medians;
    for (const auto n : c.n_grid) {
      if (n < 2) throw std::invalid_argument("greedy-scaling: n must be >= 2");
      const EdgeProbTable table(n - 1, pt.p, pt.r);
      const auto bounds = theory::greedy_bound(static_cast<double>(n), pt.r);
      std::vector<std::pair<std::int64_t, std::int64_t>> sizes(static_cast<std::size_t>(c.trials));
      detail::parallel_for(c.trials, c.threads, [&](std::int64_t t) {
        const GraphParams gp{n, pt.p, pt.r, derive_seed(c.seed, static_cast<std::uint64_t>(t))};
        const auto g = sample_graph(gp, table, 1);
        maybe_save(c, g, t);
        sizes[static_cast<std::size_t>(t)] = {g.edge_count(),
                                              static_cast<std::int64_t>(stable::greedy_in_order(g).size())};
      });
      std::vector<double> ys;
      for (std::int64_t t = 0; t < c.trials; ++t) {
        const auto [m, size] = sizes[static_cast<std::size_t>(t)];
        ys.push_back(static_cast<double>(size));
        csv << n << pt.p << pt.r << t << derive_seed(c.seed, static_cast<std::uint64_t>(t)) << m << size
            << bounds[0].value << bounds[1].value;
      }
      ns.push_back(static_cast<double>(n));
      medians.push_back(stats::median(ys));
    }
    const double exponent = theory::greedy_exponent(pt.r);
    json agg{{"p", pt.p}, {"r", pt.r}, {"n", ns}, {"median_greedy", medians}, {"exponent", exponent},
             {"exponent_ceiling", theory::greedy_exponent_ceiling(pt.r)}};
    if (ns.size() >= 2) {
      const double slope = stats::loglog_slope(ns, medians);
      agg["slope"] = slope;
      out.check("log-log slope of median greedy size >= gamma/(gamma+1) - 0.15 (" + point_label(pt) + ")",
                slope >= exponent - 0.15,
                "slope " + format_real(slope) + " vs threshold " + format_real(exponent - 0.15));
    }
    out.aggregates.push_back(std::move(agg));
  }
  return csv.str();
}

}  // namespace

const std::vector<std::string>& kind_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [kind, name] : kind_table()) v.push_back(name);
    return v;
  }();
  return names;
}

Kind parse_kind(std::string_view name) {
  for (const auto& [kind, label] : kind_table())
    if (label == name) return kind;
  throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(Kind kind) {
  for (const auto& [k, label] : kind_table())
    if (k == kind) return label;
  return "?";
}

void Config::validate() const {
  if (n_grid.empty() || p_grid.empty() || r_grid.empty()) throw std::invalid_argument("config: grids must be nonempty");
  if (!std::is_sorted(n_grid.begin(), n_grid.end()) ||
      std::adjacent_find(n_grid.begin(), n_grid.end()) != n_grid.end())
    throw std::invalid_argument("config: n grid must be strictly ascending");
  for (auto n : n_grid)
    if (n < 1) throw std::invalid_argument("config: n must be >= 1");
  for (double p : p_grid)
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("config: p must lie in (0,1]");
  for (double r : r_grid)
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("config: r must lie in (0,1]");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (!(eps >= 0.0)) throw std::invalid_argument("config: eps must be >= 0");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("config: beta must lie in [0,1]");
  if (budget == 0) throw std::invalid_argument("config: budget must be positive");
  if (threads < 0) throw std::invalid_argument("config: threads must be >= 0");
}

Config defaults_for(Kind kind) {
  Config c;
  c.kind = kind;
  c.p_grid = {0.5};
  c.r_grid = {0.5};
  switch (kind) {
    case Kind::edge_marginals:
      c.n_grid = {64};
      c.trials = 200'000;
      break;
    case Kind::degree_concentration:
      c.n_grid = {1 << 10, 1 << 13, 1 << 16};
      c.trials = 50;
      break;
    case Kind::alpha_vs_bounds:
      c.n_grid = {60};
      c.trials = 30;
      break;
    case Kind::bernoulli_concentration:
      c.n_grid = {1'000, 10'000, 100'000, 1'000'000, 10'000'000};
      c.trials = 1'000;
      break;
    case Kind::subset_oracle:
      c.n_grid = {6};
      c.p_grid = {0.3, 0.5, 0.9};
      c.r_grid = {0.1, 0.5, 0.9};
      break;
    case Kind::root_table:
      c.n_grid = {1};
      c.r_grid.clear();
      for (int k = 1; k <= 99; ++k) c.r_grid.push_back(k / 100.0);
      break;
    case Kind::greedy_scaling:
      c.n_grid = {1 << 13, 1 << 14, 1 << 15, 1 << 16, 1 << 17};
      c.trials = 20;
      break;
  }
  return c;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
    out[std::string(key)] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

std::vector<std::int64_t> parse_int_grid(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto item : split_commas(text)) out.push_back(parse_int(item));
  return out;
}

std::vector<double> parse_real_grid(std::string_view text) {
  std::vector<double> out;
  for (auto item : split_commas(text)) out.push_back(parse_real(item));
  return out;
}

void apply(Config& config, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    try {
      if (key == "n") config.n_grid = parse_int_grid(value);
      else if (key == "p") config.p_grid = parse_real_grid(value);
      else if (key == "r") config.r_grid = parse_real_grid(value);
      else if (key == "trials") config.trials = parse_int(value);
      else if (key == "seed") config.seed = parse_seed(value);
      else if (key == "eps") config.eps = parse_real(value);
      else if (key == "beta") config.beta = parse_real(value);
      else if (key == "budget") config.budget = static_cast<std::uint64_t>(parse_int(value));
      else if (key == "threads") config.threads = static_cast<int>(parse_int(value));
      else if (key == "max_empirical_n") config.max_empirical_n = parse_int(value);
      else if (key == "pz_n") config.pz_n = parse_int(value);
      else if (key == "graph_dir") config.graph_dir = value;
      else throw std::invalid_argument("unknown key");
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config key '" + key + "': " + e.what());
    }
  }
}

bool Result::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Result run(const Config& config) {
  config.validate();
  Output out;
  switch (config.kind) {
    case Kind::edge_marginals: out.result.csv = edge_marginals(config, out); break;
    case Kind::degree_concentration: out.result.csv = degree_concentration(config, out); break;
    case Kind::alpha_vs_bounds: out.result.csv = alpha_vs_bounds(config, out); break;
    case Kind::bernoulli_concentration: out.result.csv = bernoulli_concentration(config, out); break;
    case Kind::subset_oracle: out.result.csv = subset_oracle(config, out); break;
    case Kind::root_table: out.result.csv = root_table(config, out); break;
    case Kind::greedy_scaling: out.result.csv = greedy_scaling(config, out); break;
  }
  json summary;
  summary["config"] = config_echo(config);
  summary["aggregates"] = std::move(out.aggregates);
  json checks = json::array();
  for (const auto& c : out.result.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  summary["checks"] = std::move(checks);
  summary["timeouts"] = out.result.timeouts;
  summary["passed"] = out.result.passed();
  out.result.summary_json = summary.dump(2) + "\n";
  return std::move(out.result);
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace mrg::experiment
