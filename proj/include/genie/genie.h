#ifndef GENIE_GENIE_H
#define GENIE_GENIE_H

/* C interface to the Genie hierarchical clustering engine.
 *
 * All functions that can fail return a genie_status; on failure a
 * human-readable message is available from genie_last_error() (thread
 * local, valid until the next failing call on the same thread). Output
 * parameters are untouched on failure. Objects returned through **out
 * parameters are owned by the caller and released with the matching
 * _free function; every _free accepts NULL.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum genie_status {
    GENIE_OK = 0,
    GENIE_ERR_INVALID_ARGUMENT = 1, /* bad parameter value */
    GENIE_ERR_CONFIG = 2,           /* unusable option combination */
    GENIE_ERR_PARSE = 3,            /* malformed input file */
    GENIE_ERR_IO = 4,               /* missing/unreadable/unwritable file */
    GENIE_ERR_RESOURCE = 5,         /* over a configured resource cap */
    GENIE_ERR_UNDEFINED_SCORE = 6,  /* score undefined for these inputs */
    GENIE_ERR_INTERNAL = 7          /* invariant violation; report a bug */
} genie_status;

/* Message of the last failing call on this thread ("" if none). */
const char* genie_last_error(void);

const char* genie_version(void);

/* ------------------------------------------------------------------ */
/* Datasets                                                            */

typedef struct genie_dataset genie_dataset;

/* Row-major n x dim matrix, copied. All values must be finite. */
genie_status genie_dataset_from_matrix(const double* values, int64_t n,
                                       int64_t dim, genie_dataset** out);

/* n NUL-terminated strings, copied. */
genie_status genie_dataset_from_strings(const char* const* strings, int64_t n,
                                        genie_dataset** out);

/* Whitespace-separated numeric rows; .gz files are read transparently. */
genie_status genie_dataset_load_points(const char* path, genie_dataset** out);

/* One string per line; .gz files are read transparently. */
genie_status genie_dataset_load_strings(const char* path, genie_dataset** out);

/* Synthetic Gaussian blobs: k centers uniform on [0,10]^dim, each point
 * a uniformly chosen center plus iid normal(0, sigma) noise per
 * coordinate. truth_out (optional, may be NULL) receives the generating
 * center of every point as labels 1..k. */
genie_status genie_dataset_blobs(int64_t n, int64_t dim, int64_t k,
                                 double sigma, uint64_t seed,
                                 genie_dataset** out,
                                 struct genie_labels** truth_out);

int64_t genie_dataset_size(const genie_dataset* d);
int64_t genie_dataset_dim(const genie_dataset* d); /* 0 for string data */

void genie_dataset_free(genie_dataset* d);

/* ------------------------------------------------------------------ */
/* Reference labels / partitions                                       */

typedef struct genie_labels genie_labels;

/* One integer per line, remapped to 1..k in first-appearance order. */
genie_status genie_labels_load(const char* path, genie_labels** out);

genie_status genie_labels_from_array(const int32_t* values, int64_t n,
                                     genie_labels** out);

int64_t genie_labels_size(const genie_labels* l);
/* Largest label value (= cluster count for 1..k labelings). */
int32_t genie_labels_k(const genie_labels* l);
/* i must be in [0, size). */
int32_t genie_labels_get(const genie_labels* l, int64_t i);

void genie_labels_free(genie_labels* l);

/* ------------------------------------------------------------------ */
/* Clustering options                                                  */

typedef struct genie_options genie_options;

/* Defaults: algorithm "genie", metric "euclidean", threshold 0.3,
 * backend "prim", threads 1, max matrix n 20000. */
genie_options* genie_options_new(void);

/* "genie", "single", "complete", "average", "ward" */
genie_status genie_options_set_algorithm(genie_options* o, const char* name);
/* "euclidean", "manhattan", "maximum", "hamming", "levenshtein" */
genie_status genie_options_set_metric(genie_options* o, const char* name);
/* Gini threshold g in (0, 1]; g = 1 degenerates to single linkage. */
genie_status genie_options_set_threshold(genie_options* o, double g);
/* MST backend: "prim" (exhaustive) or "vptree" (metric tree). Both are
 * exact and deterministic; they differ in dissimilarity-call counts. */
genie_status genie_options_set_backend(genie_options* o, const char* name);
genie_status genie_options_set_threads(genie_options* o, int threads);
/* Size cap for the stored-matrix algorithms (complete/average/ward). */
genie_status genie_options_set_max_matrix_n(genie_options* o, int64_t n);

void genie_options_free(genie_options* o);

/* ------------------------------------------------------------------ */
/* Clustering                                                          */

typedef struct genie_clustering genie_clustering;

genie_status genie_cluster(const genie_dataset* data, const genie_options* o,
                           genie_clustering** out);

/* Number of merge steps (n - 1). */
int64_t genie_clustering_steps(const genie_clustering* c);

/* Step t in [0, steps). Members are encoded as in the serialized form:
 * original objects are -1..-n, earlier merge steps are 1..t. height may
 * decrease across steps (reversals happen). */
genie_status genie_clustering_step(const genie_clustering* c, int64_t t,
                                   int64_t* left, int64_t* right,
                                   double* height);

/* Dissimilarity evaluations performed by the producing genie_cluster call. */
uint64_t genie_clustering_distance_calls(const genie_clustering* c);

/* "prim", "vptree", or "matrix" (static storage). */
const char* genie_clustering_backend(const genie_clustering* c);

/* Text form: one `left right height` line per step, heights with 12
 * significant digits. */
genie_status genie_clustering_write(const genie_clustering* c,
                                    const char* path);

/* Partition into k clusters by undoing the last k-1 merges; labels are
 * 1..k numbered by each cluster's smallest member index. */
genie_status genie_clustering_cut(const genie_clustering* c, int64_t k,
                                  genie_labels** out);

void genie_clustering_free(genie_clustering* c);

/* ------------------------------------------------------------------ */
/* Evaluation                                                          */

/* Fowlkes-Mallows index of two labelings of the same objects; fails
 * with GENIE_ERR_UNDEFINED_SCORE if either side is all singletons. */
genie_status genie_fm_index(const genie_labels* a, const genie_labels* b,
                            double* out);

/* Look up <name>.data(.gz) and <name>.labels(.gz) under $GENIE_DATA_DIR
 * (default ./data) and load both. metric_out (optional) receives the
 * conventional metric for the dataset family -- "levenshtein" for
 * actg*, "hamming" for binstr*, "euclidean" otherwise -- as a static
 * string. Missing files give GENIE_ERR_IO. */
genie_status genie_benchmark_load(const char* name, genie_dataset** data_out,
                                  genie_labels** labels_out,
                                  const char** metric_out);

/* Benchmark protocol: `runs` clusterings of seeded random permutations
 * of the data (run r uses seed base_seed + r), each cut at k and scored
 * against `reference`; reports the median (mean of the two central
 * values for even run counts) and, optionally, the total dissimilarity
 * calls across all runs. */
genie_status genie_median_fm(const genie_dataset* data,
                             const genie_options* o,
                             const genie_labels* reference, int64_t k,
                             int runs, uint64_t base_seed, double* median_out,
                             uint64_t* total_calls_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GENIE_GENIE_H */
