/* C interface to the gpdrift library: graph constants, the drift bound kappa,
 * Monte Carlo batches of alternating random walks and their checks.
 *
 * Every function returning gpd_status reports failures through the status
 * code; gpd_last_error() then holds a message for the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with gpd_string_free(). Handles are released with their *_free function;
 * passing NULL to a *_free function is a no-op. */
#ifndef GPDRIFT_H
#define GPDRIFT_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#ifdef GPDRIFT_BUILDING
#define GPD_API __declspec(dllexport)
#else
#define GPD_API __declspec(dllimport)
#endif
#else
#define GPD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpd_status {
    GPD_OK = 0,
    GPD_ERR_INVALID_ARGUMENT = 1,
    GPD_ERR_PARSE = 2,
    GPD_ERR_SMALL_CLIQUES = 3,
    GPD_ERR_DOMAIN = 4,
    GPD_ERR_CORRUPTED = 5,
    GPD_ERR_IO = 6,
    GPD_ERR_INTERNAL = 7
} gpd_status;

typedef struct gpd_graph gpd_graph;
typedef struct gpd_batch gpd_batch;

typedef struct gpd_graph_stats {
    int64_t D;
    int64_t C;
    int64_t B;
    int small_cliques;
} gpd_graph_stats;

typedef struct gpd_kappa_result {
    double kappa;
    double t_star;
    double mgf_at_t_star;
    double mean_U;
    double t_max;
} gpd_kappa_result;

GPD_API const char* gpd_last_error(void);
GPD_API const char* gpd_version(void);
GPD_API void gpd_string_free(char* s);

/* Graphs: JSON {"vertices": [...], "edges": [[i,j],...]} or "i j" lines. */
GPD_API gpd_status gpd_graph_parse(const char* text, size_t length, gpd_graph** out);
GPD_API gpd_status gpd_graph_load(const char* path, gpd_graph** out);
GPD_API gpd_status gpd_graph_cycle(int32_t vertex_count, gpd_graph** out);
GPD_API void gpd_graph_free(gpd_graph* graph);
GPD_API int32_t gpd_graph_vertex_count(const gpd_graph* graph);
/* Number of duplicate edges merged while parsing. */
GPD_API size_t gpd_graph_duplicate_edges(const gpd_graph* graph);
GPD_API gpd_status gpd_graph_compute_stats(const gpd_graph* graph, gpd_graph_stats* out);

/* Debug rendering of the piling of a word such as "a^1 c^1 b^1". */
GPD_API gpd_status gpd_piling_render(const gpd_graph* graph, const char* group_spec, const char* word,
                                     char** out);

/* Bound. mean_U is returned exactly as numerator/denominator. */
GPD_API gpd_status gpd_mean_u(int64_t B, int64_t C, int64_t D, int64_t* numerator, int64_t* denominator);
GPD_API gpd_status gpd_kappa(int64_t B, int64_t C, int64_t D, gpd_kappa_result* out);
/* CSV "D,B,C,kappa,t_star,mean_U,mgf" for D-cycles at `points` log-spaced D. */
GPD_API gpd_status gpd_sweep_cycles_csv(int64_t from, int64_t to, int64_t points, char** out);

/* Batches. group_spec: "z", "zmod:m" or one entry per vertex separated by
 * commas. nu_spec: "fixed:<word>", "list:<path>", "letters:" or "pareto:<alpha>".
 * workers = 0 uses GPDRIFT_WORKERS or the hardware concurrency; results do
 * not depend on it. */
GPD_API gpd_status gpd_batch_run(const gpd_graph* graph, const char* group_spec, const char* nu_spec,
                                 int64_t steps, int64_t trials, uint64_t seed, unsigned workers,
                                 gpd_batch** out);
GPD_API void gpd_batch_free(gpd_batch* batch);
/* std_error is NaN for a single trial. */
GPD_API gpd_status gpd_batch_drift(const gpd_batch* batch, double* mean, double* std_error);
/* CSV "trial,syllables,A_n". */
GPD_API gpd_status gpd_batch_trials_csv(const gpd_batch* batch, char** out);
/* Runs every applicable check and writes CSV "check,statistic,threshold,pass".
 * *all_pass is 1 when no check failed (skipped checks do not fail). */
GPD_API gpd_status gpd_batch_checks_csv(const gpd_batch* batch, uint64_t seed, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* GPDRIFT_H */
