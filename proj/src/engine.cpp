#include "engine.hpp"

#include "mst.hpp"

namespace genie {

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "genie") return Algorithm::genie;
    if (name == "single") return Algorithm::single;
    if (name == "complete") return Algorithm::complete;
    if (name == "average") return Algorithm::average;
    if (name == "ward") return Algorithm::ward;
    fail(ErrorCode::config, "unknown algorithm: " + name);
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::genie: return "genie";
        case Algorithm::single: return "single";
        case Algorithm::complete: return "complete";
        case Algorithm::average: return "average";
        case Algorithm::ward: return "ward";
    }
    fail(ErrorCode::internal, "bad algorithm value");
}

MstBackend backend_from_name(const std::string& name) {
    if (name == "prim") return MstBackend::prim;
    if (name == "vptree") return MstBackend::vptree;
    fail(ErrorCode::config, "unknown backend: " + name);
}

const char* backend_name(MstBackend b) {
    switch (b) {
        case MstBackend::prim: return "prim";
        case MstBackend::vptree: return "vptree";
    }
    fail(ErrorCode::internal, "bad backend value");
}

const char* effective_backend(Algorithm a, MstBackend b) {
    if (a == Algorithm::genie || a == Algorithm::single)
        return backend_name(b);
    return "matrix";
}

MergeHistory run_clustering(const Dataset& data, Metric metric,
                            const ClusterConfig& config, CallCounter& calls) {
    if (config.threads < 1)
        fail(ErrorCode::invalid_argument, "threads must be >= 1");
    calls.reset();
    const Distance dist(data, metric, calls);

    switch (config.algorithm) {
        case Algorithm::genie:
        case Algorithm::single: {
            const Mst mst = config.backend == MstBackend::prim
                                ? mst_prim(dist, config.threads)
                                : mst_kruskal_nn(dist, config.threads);
            return config.algorithm == Algorithm::genie
                       ? genie_linkage(mst, config.gini_threshold)
                       : single_linkage(mst);
        }
        case Algorithm::complete:
            return classic_linkage(dist, ClassicScheme::complete,
                                   config.max_matrix_n);
        case Algorithm::average:
            return classic_linkage(dist, ClassicScheme::average,
                                   config.max_matrix_n);
        case Algorithm::ward:
            return classic_linkage(dist, ClassicScheme::ward,
                                   config.max_matrix_n);
    }
    fail(ErrorCode::internal, "bad algorithm value");
}

} // namespace genie
