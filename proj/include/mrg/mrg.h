/* C interface to the Markov random graph library.
 *
 * Every function that can fail returns an mrg_status; on failure a description is
 * available from mrg_last_error() on the same thread until the next failing call.
 * Strings returned through char** are owned by the caller and released with
 * mrg_string_free(). Handles are released with their *_free function. */
#ifndef MRG_MRG_H
#define MRG_MRG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MRG_BUILDING)
#define MRG_API __declspec(dllexport)
#else
#define MRG_API __declspec(dllimport)
#endif
#else
#define MRG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mrg_status {
  MRG_OK = 0,
  MRG_INVALID_ARGUMENT = 1,
  MRG_DOMAIN_ERROR = 2,
  MRG_IO_ERROR = 3,
  MRG_OUT_OF_MEMORY = 4,
  MRG_INTERNAL_ERROR = 5
} mrg_status;

typedef struct mrg_graph mrg_graph;
typedef struct mrg_result mrg_result;

typedef struct mrg_degree_stats {
  int64_t m;
  int64_t min_deg;
  int64_t max_deg;
  double avg_deg;
} mrg_degree_stats;

typedef struct mrg_alpha_result {
  int exact; /* 0 when the node budget ran out */
  int64_t value;
  int64_t lower;
  int64_t upper;
  uint64_t nodes;
} mrg_alpha_result;

typedef struct mrg_root_result {
  double c_star;
  double log_one_minus_c;
  double residual;
  int64_t iterations;
  double margin;
} mrg_root_result;

MRG_API const char* mrg_version(void);
MRG_API const char* mrg_last_error(void);
MRG_API void mrg_string_free(char* s);

MRG_API uint64_t mrg_derive_seed(uint64_t master, uint64_t index);

/* Graphs. Vertex ids are 0-based. */
MRG_API mrg_status mrg_graph_sample(int64_t n, double p, double r, uint64_t seed, int threads, mrg_graph** out);
MRG_API mrg_status mrg_graph_load(const char* dimacs_path, const char* json_path /* may be NULL */,
                                  mrg_graph** out);
MRG_API mrg_status mrg_graph_save(const mrg_graph* graph, const char* dimacs_path, const char* json_path);
MRG_API mrg_status mrg_graph_to_dimacs(const mrg_graph* graph, char** out);
MRG_API mrg_status mrg_graph_sidecar(const mrg_graph* graph, char** out_json);
MRG_API void mrg_graph_free(mrg_graph* graph);
MRG_API int64_t mrg_graph_vertex_count(const mrg_graph* graph);
MRG_API int64_t mrg_graph_edge_count(const mrg_graph* graph);
MRG_API mrg_status mrg_graph_degree_stats(const mrg_graph* graph, mrg_degree_stats* out);

/* Edge marginals p_1..p_{n-1}; `out` holds n-1 values. */
MRG_API mrg_status mrg_edge_probs(int64_t n, double p, double r, double* out);

/* Independent sets. `vertices` may be NULL; otherwise it must hold vertex_count entries
 * and receives the sorted set. */
MRG_API mrg_status mrg_greedy_in_order(const mrg_graph* graph, int64_t* vertices, int64_t* size);
MRG_API mrg_status mrg_greedy_min_degree(const mrg_graph* graph, int64_t* vertices, int64_t* size);
MRG_API mrg_status mrg_exact_alpha(const mrg_graph* graph, uint64_t budget, mrg_alpha_result* out);
MRG_API mrg_status mrg_turan_bound(int64_t n, int64_t m, double* out);

/* Theory. */
MRG_API mrg_status mrg_upper_root(double r, double tol, mrg_root_result* out);
MRG_API mrg_status mrg_independence_prob_upper(int64_t n, int64_t k, double p, double r, double* out);
/* JSON array of {name, value, validity, kind}; pass m < 0 to omit the chromatic bounds. */
MRG_API mrg_status mrg_bounds_json(int64_t n, int64_t m, double r, double eps, char** out_json);

/* Experiments. `config_text` holds "key = value" lines applied over the experiment's
 * defaults; later lines win. */
MRG_API mrg_status mrg_experiment_names(char** out /* newline separated */);
MRG_API mrg_status mrg_experiment_defaults(const char* name, char** out_text);
MRG_API mrg_status mrg_experiment_run(const char* name, const char* config_text, mrg_result** out);
MRG_API const char* mrg_result_csv(const mrg_result* result);
MRG_API const char* mrg_result_summary(const mrg_result* result);
MRG_API int mrg_result_passed(const mrg_result* result);
MRG_API int64_t mrg_result_timeouts(const mrg_result* result);
MRG_API void mrg_result_free(mrg_result* result);

/* Built-in deterministic self-checks; report is JSON, *passed is 0 or 1. */
MRG_API mrg_status mrg_verify(char** out_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* MRG_MRG_H */
