#include "genie/genie.h"

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "engine.hpp"
#include "eval.hpp"
#include "io.hpp"
#include "linkage.hpp"
#include "synthetic.hpp"

struct genie_dataset {
    genie::Dataset data;
};

struct genie_labels {
    std::vector<std::int32_t> values;
};

struct genie_options {
    genie::ClusterConfig cfg;
    genie::Metric metric = genie::Metric::euclidean;
};

struct genie_clustering {
    genie::MergeHistory history;
    std::uint64_t calls = 0;
    const char* backend = "prim"; // static storage from effective_backend
};

namespace {

thread_local std::string t_last_error;

template <typename Fn>
genie_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        return GENIE_OK;
    } catch (const genie::Error& e) {
        t_last_error = e.what();
        return static_cast<genie_status>(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return GENIE_ERR_RESOURCE;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GENIE_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) genie::fail(genie::ErrorCode::invalid_argument, what);
}

} // namespace

extern "C" {

const char* genie_last_error(void) { return t_last_error.c_str(); }

const char* genie_version(void) { return "1.0.0"; }

/* ------------------------------------------------------------------ */

genie_status genie_dataset_from_matrix(const double* values, int64_t n,
                                       int64_t dim, genie_dataset** out) {
    return wrap([&] {
        require(values && out, "null pointer argument");
        std::vector<double> copy(values,
                                 values + static_cast<std::size_t>(n * dim));
        *out = new genie_dataset{
            genie::Dataset::from_matrix(std::move(copy), n, dim)};
    });
}

genie_status genie_dataset_from_strings(const char* const* strings, int64_t n,
                                        genie_dataset** out) {
    return wrap([&] {
        require(strings && out, "null pointer argument");
        std::vector<std::string> copy;
        copy.reserve(static_cast<std::size_t>(n));
        for (int64_t i = 0; i < n; ++i) {
            require(strings[i] != nullptr, "null string in dataset");
            copy.emplace_back(strings[i]);
        }
        *out = new genie_dataset{genie::Dataset::from_strings(std::move(copy))};
    });
}

genie_status genie_dataset_load_points(const char* path, genie_dataset** out) {
    return wrap([&] {
        require(path && out, "null pointer argument");
        *out = new genie_dataset{genie::load_points(path)};
    });
}

genie_status genie_dataset_load_strings(const char* path,
                                        genie_dataset** out) {
    return wrap([&] {
        require(path && out, "null pointer argument");
        *out = new genie_dataset{genie::load_strings(path)};
    });
}

genie_status genie_dataset_blobs(int64_t n, int64_t dim, int64_t k,
                                 double sigma, uint64_t seed,
                                 genie_dataset** out,
                                 struct genie_labels** truth_out) {
    return wrap([&] {
        require(out != nullptr, "null pointer argument");
        genie::BlobData blobs = genie::gaussian_blobs(n, dim, k, sigma, seed);
        *out = new genie_dataset{std::move(blobs.points)};
        if (truth_out) *truth_out = new genie_labels{std::move(blobs.labels)};
    });
}

int64_t genie_dataset_size(const genie_dataset* d) {
    return d ? d->data.size() : 0;
}

int64_t genie_dataset_dim(const genie_dataset* d) {
    return d ? d->data.dim() : 0;
}

void genie_dataset_free(genie_dataset* d) { delete d; }

/* ------------------------------------------------------------------ */

genie_status genie_labels_load(const char* path, genie_labels** out) {
    return wrap([&] {
        require(path && out, "null pointer argument");
        *out = new genie_labels{genie::load_labels(path)};
    });
}

genie_status genie_labels_from_array(const int32_t* values, int64_t n,
                                     genie_labels** out) {
    return wrap([&] {
        require(values && out, "null pointer argument");
        require(n >= 1, "label array must be non-empty");
        *out = new genie_labels{std::vector<std::int32_t>(
            values, values + static_cast<std::size_t>(n))};
    });
}

int64_t genie_labels_size(const genie_labels* l) {
    return l ? static_cast<int64_t>(l->values.size()) : 0;
}

int32_t genie_labels_k(const genie_labels* l) {
    if (!l) return 0;
    int32_t k = 0;
    for (const auto v : l->values) k = std::max(k, v);
    return k;
}

int32_t genie_labels_get(const genie_labels* l, int64_t i) {
    return l->values[static_cast<std::size_t>(i)];
}

void genie_labels_free(genie_labels* l) { delete l; }

/* ------------------------------------------------------------------ */

genie_options* genie_options_new(void) {
    try {
        return new genie_options{};
    } catch (...) {
        return nullptr;
    }
}

genie_status genie_options_set_algorithm(genie_options* o, const char* name) {
    return wrap([&] {
        require(o && name, "null pointer argument");
        o->cfg.algorithm = genie::algorithm_from_name(name);
    });
}

genie_status genie_options_set_metric(genie_options* o, const char* name) {
    return wrap([&] {
        require(o && name, "null pointer argument");
        o->metric = genie::metric_from_name(name);
    });
}

genie_status genie_options_set_threshold(genie_options* o, double g) {
    return wrap([&] {
        require(o != nullptr, "null pointer argument");
        require(g > 0.0 && g <= 1.0, "threshold must be in (0, 1]");
        o->cfg.gini_threshold = g;
    });
}

genie_status genie_options_set_backend(genie_options* o, const char* name) {
    return wrap([&] {
        require(o && name, "null pointer argument");
        o->cfg.backend = genie::backend_from_name(name);
    });
}

genie_status genie_options_set_threads(genie_options* o, int threads) {
    return wrap([&] {
        require(o != nullptr, "null pointer argument");
        require(threads >= 1, "threads must be >= 1");
        o->cfg.threads = threads;
    });
}

genie_status genie_options_set_max_matrix_n(genie_options* o, int64_t n) {
    return wrap([&] {
        require(o != nullptr, "null pointer argument");
        require(n >= 2, "matrix cap must be >= 2");
        o->cfg.max_matrix_n = n;
    });
}

void genie_options_free(genie_options* o) { delete o; }

/* ------------------------------------------------------------------ */

genie_status genie_cluster(const genie_dataset* data, const genie_options* o,
                           genie_clustering** out) {
    return wrap([&] {
        require(data && o && out, "null pointer argument");
        genie::CallCounter calls;
        auto result = new genie_clustering{};
        try {
            result->history =
                genie::run_clustering(data->data, o->metric, o->cfg, calls);
        } catch (...) {
            delete result;
            throw;
        }
        result->calls = calls.value();
        result->backend =
            genie::effective_backend(o->cfg.algorithm, o->cfg.backend);
        *out = result;
    });
}

int64_t genie_clustering_steps(const genie_clustering* c) {
    return c ? static_cast<int64_t>(c->history.steps.size()) : 0;
}

genie_status genie_clustering_step(const genie_clustering* c, int64_t t,
                                   int64_t* left, int64_t* right,
                                   double* height) {
    return wrap([&] {
        require(c && left && right && height, "null pointer argument");
        require(t >= 0 &&
                    t < static_cast<int64_t>(c->history.steps.size()),
                "step index out of range");
        const auto& s = c->history.steps[static_cast<std::size_t>(t)];
        const std::int64_t n = c->history.n;
        *left = s.left <= n ? -s.left : s.left - n;
        *right = s.right <= n ? -s.right : s.right - n;
        *height = s.height;
    });
}

uint64_t genie_clustering_distance_calls(const genie_clustering* c) {
    return c ? c->calls : 0;
}

const char* genie_clustering_backend(const genie_clustering* c) {
    return c ? c->backend : "";
}

genie_status genie_clustering_write(const genie_clustering* c,
                                    const char* path) {
    return wrap([&] {
        require(c && path, "null pointer argument");
        std::ofstream out(path, std::ios::binary);
        if (!out) genie::fail(genie::ErrorCode::io,
                              std::string("cannot write ") + path);
        genie::write_history(out, c->history);
        if (!out.flush())
            genie::fail(genie::ErrorCode::io,
                        std::string("write error on ") + path);
    });
}

genie_status genie_clustering_cut(const genie_clustering* c, int64_t k,
                                  genie_labels** out) {
    return wrap([&] {
        require(c && out, "null pointer argument");
        *out = new genie_labels{genie::cut(c->history, k)};
    });
}

void genie_clustering_free(genie_clustering* c) { delete c; }

/* ------------------------------------------------------------------ */

genie_status genie_benchmark_load(const char* name, genie_dataset** data_out,
                                  genie_labels** labels_out,
                                  const char** metric_out) {
    return wrap([&] {
        require(name != nullptr, "null pointer argument");
        genie::BenchmarkCase c = genie::load_benchmark_case(name);
        if (metric_out) *metric_out = genie::metric_name(c.metric);
        if (labels_out) *labels_out = new genie_labels{std::move(c.reference)};
        if (data_out) *data_out = new genie_dataset{std::move(c.data)};
    });
}

genie_status genie_fm_index(const genie_labels* a, const genie_labels* b,
                            double* out) {
    return wrap([&] {
        require(a && b && out, "null pointer argument");
        *out = genie::fm_index(a->values, b->values);
    });
}

genie_status genie_median_fm(const genie_dataset* data,
                             const genie_options* o,
                             const genie_labels* reference, int64_t k,
                             int runs, uint64_t base_seed, double* median_out,
                             uint64_t* total_calls_out) {
    return wrap([&] {
        require(data && o && reference && median_out,
                "null pointer argument");
        const genie::MedianFmResult res = genie::median_fm_protocol(
            data->data, o->metric, o->cfg, reference->values, k, runs,
            base_seed);
        *median_out = res.median_fm;
        if (total_calls_out) *total_calls_out = res.total_calls;
    });
}

} // extern "C"
