#pragma once

#include <cstdint>
#include <string>

#include "dataset.hpp"
#include "linkage.hpp"
#include "metrics.hpp"

namespace genie {

enum class Algorithm { genie, single, complete, average, ward };

Algorithm algorithm_from_name(const std::string& name);
const char* algorithm_name(Algorithm a);

enum class MstBackend { prim, vptree };

MstBackend backend_from_name(const std::string& name);
const char* backend_name(MstBackend b);

struct ClusterConfig {
    Algorithm algorithm = Algorithm::genie;
    double gini_threshold = 0.3;
    MstBackend backend = MstBackend::prim;
    int threads = 1;
    std::int64_t max_matrix_n = 20000;
};

// Reporting name of the machinery actually used: the MST-driven
// algorithms (genie, single) use the configured backend; the
// stored-matrix schemes report "matrix".
const char* effective_backend(Algorithm a, MstBackend b);

// Cluster `data` end to end and return the merge history. Dissimilarity
// evaluations are tallied into `calls` (reset on entry). Deterministic
// regardless of `threads`.
MergeHistory run_clustering(const Dataset& data, Metric metric,
                            const ClusterConfig& config, CallCounter& calls);

} // namespace genie
