/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "mrg/mrg.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

int main(void) {
  EXPECT(strlen(mrg_version()) > 0);

  double probs[3];
  EXPECT(mrg_edge_probs(4, 0.5, 0.5, probs) == MRG_OK);
  EXPECT(probs[0] == 0.5 && probs[1] == 0.375 && probs[2] == 0.3046875);
  EXPECT(mrg_edge_probs(4, 1.5, 0.5, probs) == MRG_INVALID_ARGUMENT);
  EXPECT(strlen(mrg_last_error()) > 0);

  mrg_graph* g = NULL;
  EXPECT(mrg_graph_sample(200, 0.5, 0.5, 7, 1, &g) == MRG_OK);
  EXPECT(mrg_graph_vertex_count(g) == 200);
  mrg_degree_stats ds;
  EXPECT(mrg_graph_degree_stats(g, &ds) == MRG_OK);
  EXPECT(ds.m == mrg_graph_edge_count(g));

  int64_t size = 0;
  EXPECT(mrg_greedy_min_degree(g, NULL, &size) == MRG_OK);
  int64_t* set = malloc(sizeof(int64_t) * (size_t)size);
  EXPECT(mrg_greedy_min_degree(g, set, &size) == MRG_OK);
  free(set);

  mrg_alpha_result ar;
  EXPECT(mrg_exact_alpha(g, 10, &ar) == MRG_OK);
  EXPECT(ar.lower <= ar.upper);

  char* text = NULL;
  EXPECT(mrg_graph_to_dimacs(g, &text) == MRG_OK);
  EXPECT(strncmp(text, "p edge 200", 10) == 0 || strstr(text, "p edge 200") != NULL);
  mrg_string_free(text);
  mrg_graph_free(g);

  mrg_root_result root;
  EXPECT(mrg_upper_root(0.5, 1e-12, &root) == MRG_OK);
  EXPECT(fabs(root.c_star - 0.838787531372105) < 1e-12);
  EXPECT(mrg_upper_root(1.5, 1e-12, &root) == MRG_DOMAIN_ERROR);

  double bound = 0.0;
  EXPECT(mrg_turan_bound(13, 13, &bound) == MRG_OK);
  EXPECT(fabs(bound - 13.0 / 3.0) < 1e-12);
  EXPECT(mrg_independence_prob_upper(20, 5, 0.9, 0.1, &bound) == MRG_DOMAIN_ERROR);

  EXPECT(mrg_bounds_json(1000, -1, 0.5, 0.5, &text) == MRG_OK);
  EXPECT(strstr(text, "alpha_upper") != NULL);
  EXPECT(strstr(text, "chromatic") == NULL);
  mrg_string_free(text);

  EXPECT(mrg_experiment_names(&text) == MRG_OK);
  EXPECT(strstr(text, "root-table") != NULL);
  mrg_string_free(text);

  mrg_result* res = NULL;
  EXPECT(mrg_experiment_run("root-table", "r = 0.9, 0.95\n", &res) == MRG_OK);
  EXPECT(mrg_result_passed(res) == 1);
  EXPECT(strncmp(mrg_result_csv(res), "r,", 2) == 0);
  EXPECT(strstr(mrg_result_summary(res), "\"passed\"") != NULL);
  mrg_result_free(res);
  EXPECT(mrg_experiment_run("nope", NULL, &res) == MRG_INVALID_ARGUMENT);
  EXPECT(mrg_experiment_run("root-table", "bogus = 1\n", &res) == MRG_INVALID_ARGUMENT);

  EXPECT(mrg_graph_load("/nonexistent/graph.dimacs", NULL, &g) == MRG_IO_ERROR);
  EXPECT(mrg_graph_sample(10, 0.5, 0.5, 1, 1, NULL) == MRG_INVALID_ARGUMENT);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
